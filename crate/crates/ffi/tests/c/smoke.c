#include <math.h>
#include <stdio.h>
#include <string.h>

#include "fuzzymt.h"

#define CHECK(cond)                                                     \
    do {                                                                \
        if (!(cond)) {                                                  \
            fprintf(stderr, "%s:%d: %s\n", __FILE__, __LINE__, #cond);  \
            return 1;                                                   \
        }                                                               \
    } while (0)

int main(void) {
    FzmtAlgebra *alg = NULL;
    CHECK(fzmt_algebra_new(FZMT_T_NORM_PRODUCT, FZMT_SIDE_S, FZMT_SIDE_S, &alg) == FZMT_STATUS_OK);

    FzmtMtResult r;
    CHECK(fzmt_modus_tollens(alg, 0.95, 1.0, &r) == FZMT_STATUS_OK);
    CHECK(r.consistent && r.nu_not_h == 0.95);

    FzmtFormula *f = NULL;
    CHECK(fzmt_formula_parse("a -> b", &f) == FZMT_STATUS_OK);
    const char *names[] = {"a", "b"};
    double values[] = {0.3, 0.9};
    double v = -1.0;
    CHECK(fzmt_formula_eval(f, alg, names, values, 2, &v) == FZMT_STATUS_OK);
    CHECK(fabs(v - 0.97) < 1e-12);

    CHECK(fzmt_formula_parse("a & | b", &f) == FZMT_STATUS_PARSE);
    CHECK(strstr(fzmt_last_error_message(), "column 5") != NULL);

    fzmt_formula_free(f);
    fzmt_algebra_free(alg);

    FzmtAlgebra *godel = NULL;
    CHECK(fzmt_algebra_new(FZMT_T_NORM_GODEL, FZMT_SIDE_R, FZMT_SIDE_R, &godel) == FZMT_STATUS_OK);
    CHECK(fzmt_sht(godel, 0.05, 0.0, 1.0, &r) == FZMT_STATUS_OK);
    CHECK(!r.consistent && isnan(r.nu_not_h));
    CHECK(r.diagnostic == FZMT_DIAGNOSTIC_R_IMPLICATION_TWO_VALUED);
    fzmt_algebra_free(godel);

    printf("ok %s\n", fzmt_version());
    return 0;
}
