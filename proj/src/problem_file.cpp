#include "mmp/problem_file.hpp"

#include <cctype>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "mmp/errors.hpp"

namespace mmp {

namespace {

double parse_double(const std::string& token, int line_no) {
    double v = 0.0;
    const char* first = token.data();
    const char* last = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || ptr != last) {
        std::ostringstream os;
        os << "problem file line " << line_no << ": '" << token
           << "' is not a number";
        throw InputError(os.str());
    }
    return v;
}

std::vector<std::string> tokenize(const std::string& line) {
    std::vector<std::string> tokens;
    std::istringstream is(line);
    std::string tok;
    while (is >> tok) {
        if (tok.front() == '#') {
            break;
        }
        tokens.push_back(tok);
    }
    return tokens;
}

}  // namespace

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

ProblemFile read_problem_file(std::istream& in) {
    ProblemFile f;
    bool saw_version = false;
    bool saw_kind = false;
    bool saw_values = false;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const std::vector<std::string> tokens = tokenize(line);
        if (tokens.empty()) {
            continue;
        }
        const std::string& key = tokens[0];
        const auto expect_one = [&](const char* name) -> const std::string& {
            if (tokens.size() != 2) {
                std::ostringstream os;
                os << "problem file line " << line_no << ": key '" << name
                   << "' takes exactly one value";
                throw InputError(os.str());
            }
            return tokens[1];
        };
        if (key == "schema_version") {
            f.schema_version =
                static_cast<int>(parse_double(expect_one(key.c_str()),
                                              line_no));
            saw_version = true;
        } else if (key == "kind") {
            const std::string& v = expect_one("kind");
            if (v == "moments") {
                f.kind = ProblemKind::moments;
            } else if (v == "switches") {
                f.kind = ProblemKind::switches;
            } else {
                std::ostringstream os;
                os << "problem file line " << line_no << ": kind must be"
                      " 'moments' or 'switches', got '"
                   << v << "'";
                throw InputError(os.str());
            }
            saw_kind = true;
        } else if (key == "domain_scale") {
            f.domain_scale = parse_double(expect_one("domain_scale"), line_no);
        } else if (key == "imag_tol") {
            f.imag_tol = parse_double(expect_one("imag_tol"), line_no);
        } else if (key == "residual_tol") {
            f.residual_tol = parse_double(expect_one("residual_tol"), line_no);
        } else if (key == "values") {
            if (saw_values) {
                std::ostringstream os;
                os << "problem file line " << line_no
                   << ": duplicate 'values' line";
                throw InputError(os.str());
            }
            for (std::size_t i = 1; i < tokens.size(); ++i) {
                f.values.push_back(parse_double(tokens[i], line_no));
            }
            saw_values = true;
        } else {
            std::ostringstream os;
            os << "problem file line " << line_no << ": unknown key '" << key
               << "'";
            throw InputError(os.str());
        }
    }
    if (!saw_version || !saw_kind || !saw_values) {
        throw InputError(
            "problem file: schema_version, kind and values are required");
    }
    if (f.schema_version != 1) {
        std::ostringstream os;
        os << "problem file: unsupported schema_version " << f.schema_version;
        throw InputError(os.str());
    }
    if (f.values.empty()) {
        throw InputError("problem file: values line is empty");
    }
    if (f.kind == ProblemKind::moments && f.values.size() % 2 != 0) {
        std::ostringstream os;
        os << "problem file: a moments vector must have even length, got "
           << f.values.size();
        throw InputError(os.str());
    }
    if (f.kind == ProblemKind::switches) {
        for (std::size_t i = 0; i + 1 < f.values.size(); ++i) {
            if (f.values[i] > f.values[i + 1]) {
                std::ostringstream os;
                os << "problem file: switches must be nondecreasing, value "
                   << f.values[i] << " precedes " << f.values[i + 1];
                throw InputError(os.str());
            }
        }
    }
    return f;
}

ProblemFile load_problem_file(const std::string& path) {
    if (path == "-") {
        return read_problem_file(std::cin);
    }
    std::ifstream in(path);
    if (!in) {
        throw InputError("cannot open problem file '" + path + "'");
    }
    return read_problem_file(in);
}

void write_problem_file(std::ostream& out, const ProblemFile& f) {
    out << "schema_version " << f.schema_version << "\n";
    out << "kind "
        << (f.kind == ProblemKind::moments ? "moments" : "switches") << "\n";
    if (f.domain_scale) {
        out << "domain_scale " << format_double(*f.domain_scale) << "\n";
    }
    if (f.imag_tol) {
        out << "imag_tol " << format_double(*f.imag_tol) << "\n";
    }
    if (f.residual_tol) {
        out << "residual_tol " << format_double(*f.residual_tol) << "\n";
    }
    out << "values";
    for (double v : f.values) {
        out << ' ' << format_double(v);
    }
    out << "\n";
}

void save_problem_file(const std::string& path, const ProblemFile& f) {
    std::ofstream out(path);
    if (!out) {
        throw InputError("cannot write problem file '" + path + "'");
    }
    write_problem_file(out, f);
    out.flush();
    if (!out) {
        throw InputError("failed writing problem file '" + path + "'");
    }
}

}  // namespace mmp
