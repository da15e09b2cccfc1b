#include <stdio.h>
#include <string.h>

#include "permcheck.h"

int main(void) {
    PcGroup *g = NULL;
    if (pc_group_from_name("D8", 0, 0, &g) != PC_STATUS_OK) {
        fprintf(stderr, "build failed: %s\n", pc_last_error_message());
        return 1;
    }
    if (pc_group_order(g) != 8 || pc_group_num_subgroups(g) != 10) {
        return 2;
    }
    PcCheckVerdict v;
    if (pc_check(g, "s", "r s", &v) != PC_STATUS_OK || v.permutes || !v.perm4) {
        return 3;
    }
    char *json = NULL;
    if (pc_classify_json(g, &json) != PC_STATUS_OK || strstr(json, "\"sq4t\": true") == NULL) {
        return 4;
    }
    pc_string_free(json);
    pc_group_free(g);

    if (pc_group_from_name("S9", 0, 0, &g) != PC_STATUS_CAP_EXCEEDED) {
        return 5;
    }
    printf("ok\n");
    return 0;
}
