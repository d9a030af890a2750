#include <stdio.h>
#include <string.h>

#include "noc.h"

static int fail(const char *what) {
    const char *e = noc_last_error();
    fprintf(stderr, "%s: %s\n", what, e ? e : "(no message)");
    return 1;
}

int main(void) {
    NocPoly *c = NULL;
    if (noc_class_of("C", &c) != NOC_STATUS_OK) return fail("class_of");
    char *s = NULL;
    if (noc_poly_to_string(c, &s) != NOC_STATUS_OK) return fail("to_string");
    int64_t num = 0, den = 0;
    if (noc_poly_degree(c, &num, &den) != NOC_STATUS_OK) return fail("degree");
    printf("%s %lld/%lld\n", s, (long long)num, (long long)den);
    noc_string_free(s);
    noc_poly_free(c);

    NocPoly *bad = NULL;
    if (noc_class_of("nope", &bad) != NOC_STATUS_UNKNOWN_ORBIT || bad != NULL) return fail("unknown orbit");

    NocNet *n = NULL;
    if (noc_net_parse("y^2 + 2xz", "2yz", "-x^2 + 2xz - 2y^2 - 9z^2", &n) != NOC_STATUS_OK) return fail("net");
    char *j6 = NULL, *j12 = NULL, *v = NULL;
    if (noc_net_invariants(n, &j6, &j12, &v) != NOC_STATUS_OK) return fail("invariants");
    printf("%s %s %s\n", j6, j12, v);
    noc_string_free(j6);
    noc_string_free(j12);
    noc_string_free(v);
    noc_net_free(n);
    return 0;
}
