#include "hyper/report.hpp"

#include <iomanip>
#include <sstream>

namespace hyper {

nlohmann::json Report::to_json() const {
    nlohmann::json checks_json = nlohmann::json::array();
    for (const auto& c : checks)
        checks_json.push_back({{"name", c.name},
                               {"residual", c.residual},
                               {"tolerance", c.tolerance},
                               {"pass", c.pass}});
    return nlohmann::json{{"suite", suite},
                          {"seed", seed},
                          {"trials", trials},
                          {"checks", checks_json},
                          {"pass", pass()}};
}

std::string Report::human_table() const {
    std::ostringstream os;
    os << "suite: " << suite << "  (seed " << seed << ", trials " << trials << ")\n";
    std::size_t width = 4;
    for (const auto& c : checks) width = std::max(width, c.name.size());
    for (const auto& c : checks) {
        os << "  " << std::left << std::setw(static_cast<int>(width)) << c.name << "  "
           << (c.pass ? "PASS" : "FAIL") << "  residual " << std::scientific
           << std::setprecision(3) << c.residual << "  (tol " << c.tolerance << ")\n";
    }
    os << (pass() ? "ALL CHECKS PASSED" : "CHECK FAILURES PRESENT");
    os << std::fixed << std::setprecision(1) << "  [" << wall_ms << " ms]\n";
    return os.str();
}

} // namespace hyper
