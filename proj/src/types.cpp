#include "types.hpp"

namespace qcontract {

Tolerances& tols() {
    static Tolerances t;
    return t;
}

void Tolerances::set(const std::string& key, double value) {
    if (value <= 0) fail(ErrorKind::DomainError, "tolerance '" + key + "' must be positive");
    if (key == "herm") herm_factor = value;
    else if (key == "psd") psd_factor = value;
    else if (key == "recon") recon_factor = value;
    else if (key == "kraus_trunc") kraus_trunc_factor = value;
    else if (key == "rank") rank_factor = value;
    else if (key == "tp") tp = value;
    else if (key == "trace_one") trace_one = value;
    else if (key == "support") support = value;
    else if (key == "gs_tol") gs_tol = value;
    else if (key == "gs_floor") gs_floor_factor = value;
    else if (key == "imag_residual") imag_residual = value;
    else if (key == "lambda1") lambda1 = value;
    else if (key == "eta_gap") eta_gap = value;
    else if (key == "eta_range") eta_range = value;
    else if (key == "fix") fix = value;
    else if (key == "degeneracy") degeneracy_factor = value;
    else fail(ErrorKind::ParseError, "unknown tolerance key '" + key + "'");
}

} // namespace qcontract
