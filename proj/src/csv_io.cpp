#include "logconcave/csv_io.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace logconcave {

namespace {

std::string strip(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

double parse_double(const std::string& tok) {
    const std::string t = strip(tok);
    if (t == "-inf" || t == "-INF") return -std::numeric_limits<double>::infinity();
    size_t pos = 0;
    double v;
    try {
        v = std::stod(t, &pos);
    } catch (const std::exception&) {
        throw std::invalid_argument("csv: malformed number '" + tok + "'");
    }
    if (pos != t.size()) throw std::invalid_argument("csv: trailing characters in '" + tok + "'");
    return v;
}

bool split2(const std::string& line, std::string& a, std::string& b) {
    const size_t comma = line.find(',');
    if (comma == std::string::npos) return false;
    a = line.substr(0, comma);
    b = line.substr(comma + 1);
    return b.find(',') == std::string::npos;
}

std::string read_header(std::istream& in) {
    std::string line;
    while (std::getline(in, line)) {
        line = strip(line);
        if (!line.empty() && line[0] != '#') return line;
    }
    throw std::invalid_argument("csv: empty input");
}

}  // namespace

GridDensity read_grid_density_csv(std::istream& in) {
    const std::string header = read_header(in);
    if (strip(header) != "x,logf") throw std::invalid_argument("csv: expected header 'x,logf'");
    std::vector<double> knots, logvals;
    std::string line;
    while (std::getline(in, line)) {
        line = strip(line);
        if (line.empty() || line[0] == '#') continue;
        std::string a, b;
        if (!split2(line, a, b)) throw std::invalid_argument("csv: expected two columns: " + line);
        const double x = parse_double(a);
        if (!std::isfinite(x)) throw std::invalid_argument("csv: knot must be finite");
        if (!knots.empty() && !(x > knots.back()))
            throw std::invalid_argument("csv: knots must be strictly increasing");
        knots.push_back(x);
        logvals.push_back(parse_double(b));
    }
    GridDensity g(std::move(knots), std::move(logvals));
    g.normalize();
    return g;
}

DiscretePMF read_discrete_pmf_csv(std::istream& in) {
    const std::string header = read_header(in);
    if (strip(header) != "n,p") throw std::invalid_argument("csv: expected header 'n,p'");
    std::vector<double> weights;
    bool have_first = false;
    std::int64_t first = 0, prev = 0;
    std::string line;
    while (std::getline(in, line)) {
        line = strip(line);
        if (line.empty() || line[0] == '#') continue;
        std::string a, b;
        if (!split2(line, a, b)) throw std::invalid_argument("csv: expected two columns: " + line);
        const double nd = parse_double(a);
        const std::int64_t n = static_cast<std::int64_t>(std::llround(nd));
        if (static_cast<double>(n) != nd) throw std::invalid_argument("csv: support points must be integers");
        if (!have_first) {
            first = n;
            have_first = true;
        } else if (n != prev + 1) {
            throw std::invalid_argument("csv: support points must be consecutive integers");
        }
        prev = n;
        const double w = parse_double(b);
        if (!(w >= 0.0) || !std::isfinite(w)) throw std::invalid_argument("csv: weights must be nonnegative");
        weights.push_back(w);
    }
    DiscretePMF g(first, std::move(weights));
    g.normalize();
    return g;
}

std::variant<GridDensity, DiscretePMF> read_distribution_csv(std::istream& in) {
    std::stringstream buffer;
    buffer << in.rdbuf();
    const std::string content = buffer.str();
    std::istringstream probe(content);
    const std::string header = strip(read_header(probe));
    std::istringstream body(content);
    if (header == "x,logf") return read_grid_density_csv(body);
    if (header == "n,p") return read_discrete_pmf_csv(body);
    throw std::invalid_argument("csv: unrecognized header '" + header + "' (want 'x,logf' or 'n,p')");
}

std::variant<GridDensity, DiscretePMF> read_distribution_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open input file: " + path);
    return read_distribution_csv(in);
}

void write_grid_density_csv(std::ostream& out, const GridDensity& g) {
    out << "x,logf\n";
    out.precision(17);
    for (size_t i = 0; i < g.knots().size(); ++i) {
        const double lv = g.logvals()[i];
        out << g.knots()[i] << ',';
        if (lv == -std::numeric_limits<double>::infinity())
            out << "-inf";
        else
            out << lv;
        out << '\n';
    }
}

void write_discrete_pmf_csv(std::ostream& out, const DiscretePMF& g) {
    out << "n,p\n";
    out.precision(17);
    for (size_t i = 0; i < g.weights().size(); ++i)
        out << g.offset() + static_cast<std::int64_t>(i) << ',' << g.weights()[i] << '\n';
}

}  // namespace logconcave
