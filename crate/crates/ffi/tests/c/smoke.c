#include <stdio.h>
#include "critgroup.h"

int main(void) {
    CgGraph *g = NULL;
    CgStatus st = cg_graph_parse("n 5\ne 1 2\ne 2 3\ne 3 4\ne 4 5\ne 5 1\n", &g);
    if (st != CG_STATUS_OK) {
        fprintf(stderr, "%s\n", cg_last_error_message());
        return 1;
    }
    char *h = NULL;
    if (cg_pair_order(g, 0, 4, &h) != CG_STATUS_OK) return 1;
    printf("h = %s\n", h);
    cg_string_free(h);

    CgMatrix *m = NULL;
    int64_t *vals = NULL;
    size_t len = 0;
    cg_graph_laplacian(g, true, &m);
    cg_collapsed_values_full(m, &vals, &len);
    printf("collapsed:");
    for (size_t k = 0; k < len; k++) printf(" %lld", (long long)vals[k]);
    printf("\n");
    cg_values_free(vals, len);
    cg_matrix_free(m);
    cg_graph_free(g);
    return 0;
}
