#include <modcf/period.hpp>

namespace modcf {

std::string to_string(const PeriodReport& report)
{
    if (report.periodic()) {
        return "periodic(N=" + std::to_string(report.start) + ", L=" + std::to_string(report.length) + ")";
    }
    return "no_period_up_to(N_max=" + std::to_string(report.n_max) + ", L_max=" + std::to_string(report.l_max)
        + ", prefix_len=" + std::to_string(report.prefix_len) + ")";
}

} // namespace modcf
