#include "ajpoly/report.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>

namespace ajpoly {

Report::Report(const std::string& command) {
    j_["schema_version"] = 1;
    j_["command"] = command;
    j_["params"] = nlohmann::json::object();
    j_["results"] = nlohmann::json::object();
    j_["checks"] = nlohmann::json::array();
}

void Report::add_check(const std::string& name, bool pass, const nlohmann::json& detail) {
    nlohmann::json c;
    c["name"] = name;
    c["pass"] = pass;
    if (!detail.is_null()) c["detail"] = detail;
    j_["checks"].push_back(c);
    pass_ = pass_ && pass;
}

std::string Report::dump() const {
    nlohmann::json out = j_;
    out["pass"] = pass_;
    return out.dump(2);
}

void Report::write(const std::string& path, bool quiet) const {
    std::string s = dump();
    if (!path.empty()) {
        std::ofstream f(path);
        f << s << "\n";
    }
    if (!quiet) std::cout << s << "\n";
}

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

}  // namespace ajpoly
