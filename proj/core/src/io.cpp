#include "plateopt/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <system_error>
#include <vector>

namespace plateopt {

std::string format_double(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

namespace {

double parse_double(const std::string& s, const char* what) {
    double v = 0.0;
    const char* first = s.data();
    const char* last = s.data() + s.size();
    auto res = std::from_chars(first, last, v);
    if (res.ec != std::errc() || res.ptr != last)
        throw std::invalid_argument(std::string(what) + ": bad number '" + s + "'");
    return v;
}

long parse_int(const std::string& s, const char* what) {
    long v = 0;
    auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (res.ec != std::errc() || res.ptr != s.data() + s.size())
        throw std::invalid_argument(std::string(what) + ": bad integer '" + s + "'");
    return v;
}

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream ss(line);
    while (std::getline(ss, cur, ','))
        out.push_back(cur);
    return out;
}

} // namespace

void save_csv(const GridFunction& f, std::ostream& out) {
    const Grid& g = *f.grid();
    if (g.kind() == GridKind::Radial) {
        out << "radial," << format_double(g.radius()) << ',' << g.size() << '\n';
    } else {
        out << "cartesian," << format_double(g.length_x()) << ',' << format_double(g.length_y())
            << ',' << g.count_x() << ',' << g.count_y() << '\n';
    }
    for (int i = 0; i < f.size(); ++i)
        out << format_double(f[i]) << '\n';
}

void save_csv(const GridFunction& f, const std::string& path) {
    std::ofstream out(path);
    if (!out)
        throw std::invalid_argument("save_csv: cannot open " + path);
    save_csv(f, out);
}

GridFunction load_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line))
        throw std::invalid_argument("load_csv: empty input");
    const auto header = split_csv(line);
    GridPtr grid;
    if (!header.empty() && header[0] == "radial" && header.size() == 3) {
        grid = build_radial_grid(parse_double(header[1], "load_csv radius"),
                                 static_cast<int>(parse_int(header[2], "load_csv node count")));
    } else if (!header.empty() && header[0] == "cartesian" && header.size() == 5) {
        grid = build_cartesian_grid(parse_double(header[1], "load_csv Lx"),
                                    parse_double(header[2], "load_csv Ly"),
                                    static_cast<int>(parse_int(header[3], "load_csv nx")),
                                    static_cast<int>(parse_int(header[4], "load_csv ny")));
    } else {
        throw std::invalid_argument("load_csv: unrecognized header '" + line + "'");
    }

    Eigen::VectorXd values(grid->size());
    for (int i = 0; i < grid->size(); ++i) {
        if (!std::getline(in, line))
            throw std::invalid_argument("load_csv: fewer values than grid nodes");
        values[i] = parse_double(line, "load_csv value");
    }
    return GridFunction(grid, std::move(values));
}

GridFunction load_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw std::invalid_argument("load_csv: cannot open " + path);
    return load_csv(in);
}

} // namespace plateopt
