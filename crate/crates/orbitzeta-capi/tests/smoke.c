#include <stdio.h>
#include <string.h>
#include <assert.h>
#include "orbitzeta.h"

int main(void) {
    assert(strlen(oz_version()) > 0);

    OzPartition *p = NULL;
    assert(oz_partition_parse("2,1", &p) == OZ_STATUS_OK);
    assert(oz_partition_n(p) == 3);
    assert(oz_partition_m(p) == 2);
    assert(!oz_partition_is_rectangle(p));

    char *text = NULL;
    assert(oz_cpoly_text(p, false, 0, &text) == OZ_STATUS_OK);
    assert(strcmp(text, "1 + x*q + x*q^2") == 0);
    oz_string_free(text);

    char *cd = NULL;
    assert(oz_charney_davis_decimal(p, &cd) == OZ_STATUS_OK);
    assert(strcmp(cd, "-1") == 0);
    oz_string_free(cd);

    bool holds = false;
    assert(oz_igusa_check(p, 2, 10, 1000, &holds) == OZ_STATUS_OK);
    assert(holds);

    oz_partition_free(p);

    OzPartition *bad = NULL;
    assert(oz_partition_parse("0,1", &bad) == OZ_STATUS_VALIDATION);
    char *msg = oz_last_error_message();
    assert(msg != NULL);
    oz_string_free(msg);

    printf("c smoke ok\n");
    return 0;
}
