#include "thermalent/io.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "thermalent/version.hpp"

namespace thermalent {

namespace {

std::string fmt_g(double x, int significant) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.*g", significant, x);
    return buf;
}

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r\n");
    if (begin == std::string::npos) return "";
    const auto end = s.find_last_not_of(" \t\r\n");
    return s.substr(begin, end - begin + 1);
}

double parse_double(const std::string& token, int line_no, const std::string& what) {
    const char* start = token.c_str();
    char* end = nullptr;
    const double value = std::strtod(start, &end);
    if (end == start || *end != '\0')
        throw SyntaxError("line " + std::to_string(line_no) + ": expected a number for " + what +
                          ", got '" + token + "'");
    return value;
}

// Whitespace tokens, except that a '[' opens a bracketed token running to the
// matching ']' so complex pairs may contain spaces.
std::vector<std::string> tokenize(const std::string& line, int line_no) {
    std::vector<std::string> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
        if (std::isspace(static_cast<unsigned char>(line[i]))) {
            ++i;
            continue;
        }
        if (line[i] == '[') {
            const std::size_t close = line.find(']', i);
            if (close == std::string::npos)
                throw SyntaxError("line " + std::to_string(line_no) + ": unterminated '['");
            tokens.push_back(line.substr(i, close - i + 1));
            i = close + 1;
        } else {
            std::size_t end = i;
            while (end < line.size() && !std::isspace(static_cast<unsigned char>(line[end])))
                ++end;
            tokens.push_back(line.substr(i, end - i));
            i = end;
        }
    }
    return tokens;
}

Complex parse_entry(const std::string& token, int line_no, const std::string& what) {
    if (!token.empty() && token.front() == '[') {
        if (token.back() != ']')
            throw SyntaxError("line " + std::to_string(line_no) + ": malformed complex entry '" +
                              token + "'");
        const std::string inner = token.substr(1, token.size() - 2);
        const std::size_t comma = inner.find(',');
        if (comma == std::string::npos)
            throw SyntaxError("line " + std::to_string(line_no) +
                              ": complex entry must be [re, im], got '" + token + "'");
        const double re = parse_double(trim(inner.substr(0, comma)), line_no, what);
        const double im = parse_double(trim(inner.substr(comma + 1)), line_no, what);
        return Complex(re, im);
    }
    return Complex(parse_double(token, line_no, what), 0.0);
}

}  // namespace

HamiltonianSpec parse_hamiltonian(std::istream& in) {
    std::optional<std::pair<std::size_t, std::size_t>> dims;
    std::optional<std::vector<double>> eigenvalues;
    std::vector<std::vector<Complex>> eigenvectors;
    std::string label;

    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const std::size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        const std::vector<std::string> tokens = tokenize(line, line_no);
        if (tokens.empty()) continue;

        const std::string& key = tokens.front();
        if (key == "label") {
            std::string rest;
            for (std::size_t k = 1; k < tokens.size(); ++k) {
                if (k > 1) rest += ' ';
                rest += tokens[k];
            }
            label = rest;
        } else if (key == "dims") {
            if (dims)
                throw SyntaxError("line " + std::to_string(line_no) + ": duplicate 'dims'");
            if (tokens.size() != 3)
                throw SyntaxError("line " + std::to_string(line_no) +
                                  ": 'dims' takes exactly two integers");
            const double d1 = parse_double(tokens[1], line_no, "dims");
            const double d2 = parse_double(tokens[2], line_no, "dims");
            dims = {static_cast<std::size_t>(d1), static_cast<std::size_t>(d2)};
        } else if (key == "eigenvalues") {
            if (eigenvalues)
                throw SyntaxError("line " + std::to_string(line_no) + ": duplicate 'eigenvalues'");
            std::vector<double> values;
            for (std::size_t k = 1; k < tokens.size(); ++k)
                values.push_back(parse_double(tokens[k], line_no, "eigenvalue"));
            eigenvalues = std::move(values);
        } else if (key == "eigenvector") {
            std::vector<Complex> v;
            const std::string what = "eigenvector " + std::to_string(eigenvectors.size() + 1);
            for (std::size_t k = 1; k < tokens.size(); ++k)
                v.push_back(parse_entry(tokens[k], line_no, what));
            eigenvectors.push_back(std::move(v));
        } else {
            throw SyntaxError("line " + std::to_string(line_no) + ": unknown key '" + key + "'");
        }
    }

    if (!dims) throw SyntaxError("missing 'dims' line");
    if (!eigenvalues) throw SyntaxError("missing 'eigenvalues' line");

    HamiltonianSpec raw;
    raw.shape = BipartiteShape{dims->first, dims->second};
    validate_shape(raw.shape);
    raw.eigenvalues = std::move(*eigenvalues);
    raw.eigenvectors = std::move(eigenvectors);
    raw.label = label;
    return normalize_spec(std::move(raw));
}

HamiltonianSpec parse_hamiltonian_text(const std::string& text) {
    std::istringstream in(text);
    return parse_hamiltonian(in);
}

HamiltonianSpec load_hamiltonian_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open Hamiltonian file '" + path + "'");
    return parse_hamiltonian(in);
}

std::string serialize_hamiltonian(const HamiltonianSpec& spec) {
    std::ostringstream out;
    if (!spec.label.empty()) out << "label " << spec.label << '\n';
    out << "dims " << spec.shape.d1 << ' ' << spec.shape.d2 << '\n';
    out << "eigenvalues";
    for (double h : spec.eigenvalues) out << ' ' << fmt_g(h, 17);
    out << '\n';
    for (const auto& v : spec.eigenvectors) {
        out << "eigenvector";
        for (const Complex& e : v) {
            if (e.imag() == 0.0)
                out << ' ' << fmt_g(e.real(), 17);
            else
                out << " [" << fmt_g(e.real(), 17) << ", " << fmt_g(e.imag(), 17) << ']';
        }
        out << '\n';
    }
    return out.str();
}

std::string to_csv(const std::vector<ThermalPoint>& points) {
    std::ostringstream out;
    out << "T,energy,purity,lambda_min,modulus\n";
    for (const ThermalPoint& p : points) {
        out << fmt_g(p.temperature, 9) << ',' << fmt_g(p.energy, 9) << ',' << fmt_g(p.purity, 9)
            << ',' << fmt_g(p.lambda_min, 9) << ',' << fmt_g(p.modulus, 9) << '\n';
    }
    return out.str();
}

std::string serialize_report(const CriticalReport& report) {
    std::ostringstream out;
    out << "tool thermalent " << report.tool_version << '\n';
    out << "label " << report.label << '\n';
    out << "dims " << report.shape.d1 << ' ' << report.shape.d2 << '\n';
    out << "grid_points " << report.options.grid_points << '\n';
    out << "refine_tol " << fmt_g(report.options.refine_tol, 6) << '\n';
    out << "zero_tol " << fmt_g(report.options.zero_tol, 6) << '\n';
    out << "marginal_tol " << fmt_g(report.options.marginal_tol, 6) << '\n';
    if (report.eta) {
        out << "eta " << fmt_g(*report.eta, 9) << '\n';
        if (report.restarts) out << "restarts " << *report.restarts << '\n';
        if (report.seed) out << "seed " << *report.seed << '\n';
    }
    const SegmentReport& seg = report.segments;
    if (seg.t_h) out << "t_h " << fmt_g(*seg.t_h, 6) << '\n';
    out << "t_e " << fmt_g(seg.t_e, 6) << '\n';
    out << "boundaries";
    if (seg.boundaries.empty())
        out << " none";
    else
        for (double b : seg.boundaries) out << ' ' << fmt_g(b, 6);
    out << '\n';
    out << "t_s " << fmt_g(seg.t_s, 6) << '\n';
    out << "t_star " << fmt_g(seg.t_star, 6) << '\n';
    out << "segments ";
    for (std::size_t i = 0; i < seg.segments.size(); ++i) {
        const Segment& s = seg.segments[i];
        if (i > 0) out << "; ";
        out << fmt_g(s.lower, 6) << ".." << fmt_g(s.upper, 6) << '=' << to_string(s.kind);
    }
    out << '\n';
    out << "scenario " << to_string(seg.scenario) << '\n';
    out << "wehrl_pair";
    if (seg.wehrl_pair)
        out << ' ' << fmt_g(seg.wehrl_pair->first, 6) << ' ' << fmt_g(seg.wehrl_pair->second, 6);
    else
        out << " none";
    out << '\n';
    return out.str();
}

CriticalReport parse_report(const std::string& text) {
    CriticalReport report;
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        line = trim(line);
        if (line.empty()) continue;
        const std::size_t space = line.find(' ');
        const std::string key = line.substr(0, space);
        const std::string rest = space == std::string::npos ? "" : trim(line.substr(space + 1));

        if (key == "tool") {
            const std::size_t ver = rest.rfind(' ');
            report.tool_version = ver == std::string::npos ? rest : rest.substr(ver + 1);
        } else if (key == "label") {
            report.label = rest;
        } else if (key == "dims") {
            const std::vector<std::string> tokens = tokenize(rest, line_no);
            if (tokens.size() != 2)
                throw SyntaxError("line " + std::to_string(line_no) + ": malformed dims");
            report.shape.d1 = static_cast<std::size_t>(parse_double(tokens[0], line_no, "dims"));
            report.shape.d2 = static_cast<std::size_t>(parse_double(tokens[1], line_no, "dims"));
        } else if (key == "grid_points") {
            report.options.grid_points =
                static_cast<std::size_t>(parse_double(rest, line_no, key));
        } else if (key == "refine_tol") {
            report.options.refine_tol = parse_double(rest, line_no, key);
        } else if (key == "zero_tol") {
            report.options.zero_tol = parse_double(rest, line_no, key);
        } else if (key == "marginal_tol") {
            report.options.marginal_tol = parse_double(rest, line_no, key);
        } else if (key == "eta") {
            report.eta = parse_double(rest, line_no, key);
        } else if (key == "restarts") {
            report.restarts = static_cast<int>(parse_double(rest, line_no, key));
        } else if (key == "seed") {
            report.seed = static_cast<std::uint64_t>(parse_double(rest, line_no, key));
        } else if (key == "t_h") {
            report.segments.t_h = parse_double(rest, line_no, key);
        } else if (key == "t_e") {
            report.segments.t_e = parse_double(rest, line_no, key);
        } else if (key == "t_s") {
            report.segments.t_s = parse_double(rest, line_no, key);
        } else if (key == "t_star") {
            report.segments.t_star = parse_double(rest, line_no, key);
        } else if (key == "boundaries") {
            if (rest != "none")
                for (const std::string& token : tokenize(rest, line_no))
                    report.segments.boundaries.push_back(parse_double(token, line_no, key));
        } else if (key == "segments") {
            std::istringstream items(rest);
            std::string item;
            while (std::getline(items, item, ';')) {
                item = trim(item);
                if (item.empty()) continue;
                const std::size_t dots = item.find("..");
                const std::size_t eq = item.find('=', dots == std::string::npos ? 0 : dots);
                if (dots == std::string::npos || eq == std::string::npos)
                    throw SyntaxError("line " + std::to_string(line_no) +
                                      ": malformed segment '" + item + "'");
                Segment s{};
                s.lower = parse_double(item.substr(0, dots), line_no, "segment");
                s.upper = parse_double(item.substr(dots + 2, eq - dots - 2), line_no, "segment");
                const std::string kind = trim(item.substr(eq + 1));
                if (kind == "separable")
                    s.kind = SegmentKind::separable;
                else if (kind == "entangled")
                    s.kind = SegmentKind::entangled;
                else if (kind == "marginal")
                    s.kind = SegmentKind::marginal;
                else
                    throw SyntaxError("line " + std::to_string(line_no) +
                                      ": unknown segment kind '" + kind + "'");
                report.segments.segments.push_back(s);
            }
        } else if (key == "scenario") {
            if (rest == "trivial")
                report.segments.scenario = Scenario::trivial;
            else if (rest == "normal")
                report.segments.scenario = Scenario::normal;
            else if (rest == "separable-then-entangled")
                report.segments.scenario = Scenario::separable_then_entangled;
            else if (rest == "abnormal")
                report.segments.scenario = Scenario::abnormal;
            else
                throw SyntaxError("line " + std::to_string(line_no) + ": unknown scenario '" +
                                  rest + "'");
        } else if (key == "wehrl_pair") {
            if (rest != "none") {
                const std::vector<std::string> tokens = tokenize(rest, line_no);
                if (tokens.size() != 2)
                    throw SyntaxError("line " + std::to_string(line_no) +
                                      ": wehrl_pair takes two temperatures");
                report.segments.wehrl_pair = {parse_double(tokens[0], line_no, key),
                                              parse_double(tokens[1], line_no, key)};
            }
        } else {
            throw SyntaxError("line " + std::to_string(line_no) + ": unknown report key '" + key +
                              "'");
        }
    }
    return report;
}

}  // namespace thermalent
