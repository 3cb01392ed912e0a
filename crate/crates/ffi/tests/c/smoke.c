#include <stdio.h>
#include <string.h>

#include "multiwheel.h"

int main(void) {
    MwGraph *g = NULL;
    if (mw_graph_from_spec("g:q=2", &g) != MW_OK) {
        fprintf(stderr, "%s\n", mw_last_error());
        return 1;
    }
    size_t n = 0, m = 0;
    uint32_t chi = 0;
    bool planar = true;
    mw_graph_vertex_count(g, &n);
    mw_graph_edge_count(g, &m);
    mw_chromatic_number(g, &chi);
    mw_is_planar(g, &planar);
    char *g6 = NULL;
    mw_graph_to_graph6(g, &g6);
    printf("n=%zu m=%zu chi=%u planar=%d g6=%s\n", n, m, chi, planar, g6);
    mw_string_free(g6);
    mw_graph_free(g);
    if (mw_graph_from_spec("w:1rr-1rr", &g) != MW_PARSE_ERROR) {
        return 1;
    }
    printf("error: %s\n", mw_last_error());
    return 0;
}
