#pragma once

#include <string>
#include <vector>

#include "quintic/frobenius.hpp"
#include "quintic/qdiff.hpp"

namespace qk {

/* One named verification with a minimal failing-coefficient report: detail
   is empty on success and otherwise pins the first mismatching coefficient
   (degree, coordinate, both values). */
struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

/* flow J-function equals the closed-form J-function through `order` */
std::vector<CheckResult> verify_conjecture(const GVTable& gv, int order);
/* factorization of the shifted frame: T matches its closed form, T U
   reproduces the frame, U entries are Laurent, T - I is reduced */
std::vector<CheckResult> verify_birkhoff(const GVTable& gv, int order);
/* binomial residuals vanish through Q^q_order (data computed one order
   higher); the 25th-order operator is exactly left-divisible by 1 - E */
std::vector<CheckResult> verify_frobenius(int q_order);
/* projection identities, closed kernel forms, and q = 1 limits for all
   1 <= d, r <= bound */
std::vector<CheckResult> verify_kernels(int bound);
/* every suite above at one order */
std::vector<CheckResult> verify_all(const GVTable& gv, int order);

}  // namespace qk
