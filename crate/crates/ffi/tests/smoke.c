#include <stdio.h>
#include "brandt_omega.h"

int main(void) {
    BoFamily *family = NULL;
    if (bo_family_new("0,1,3", &family) != BO_STATUS_OK) {
        fprintf(stderr, "%s\n", bo_last_error());
        return 1;
    }
    BoElem a = {false, 0, 1, 3}, b = {false, 3, 0, 1}, product;
    BoStatus status = bo_multiply(family, a, b, &product);
    bo_family_free(family);
    return status == BO_STATUS_OK && product.i == 2 && product.j == 0 && product.k == 1 ? 0 : 1;
}
