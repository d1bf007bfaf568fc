#include "sharygin/appendix.hpp"

#include <sstream>

#include "sharygin/appendix_data.hpp"

namespace sharygin {

namespace {

std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> fields;
    std::string current;
    for (char ch : line) {
        if (ch == '|') {
            fields.push_back(current);
            current.clear();
        } else {
            current += ch;
        }
    }
    fields.push_back(current);
    for (std::string& f : fields) {
        size_t begin = f.find_first_not_of(" \t");
        size_t end = f.find_last_not_of(" \t");
        f = (begin == std::string::npos) ? std::string() : f.substr(begin, end - begin + 1);
    }
    return fields;
}

Form parse_form_name(const std::string& name) {
    if (name == "minimal") return Form::minimal;
    if (name == "weierstrass") return Form::weierstrass;
    if (name == "cubic") return Form::cubic;
    throw std::invalid_argument("appendix errata: unknown form '" + name + "'");
}

}  // namespace

std::pair<int, bool> parse_point_label(const std::string& label) {
    if (label == "O") return {0, false};
    if (label == "D") return {0, true};
    std::string body = label;
    bool with_d = false;
    if (body.size() > 2 && body.substr(body.size() - 2) == "+D") {
        with_d = true;
        body = body.substr(0, body.size() - 2);
    }
    if (body.empty() || body.back() != 'A')
        throw std::invalid_argument("parse_point_label: bad label '" + label + "'");
    body.pop_back();
    int n = body.empty() ? 1 : std::stoi(body);
    if (n < 1) throw std::invalid_argument("parse_point_label: bad multiple in '" + label + "'");
    return {n, with_d};
}

std::string point_label(int n, bool with_d) {
    if (n == 0) return with_d ? "D" : "O";
    std::string base = (n == 1) ? "A" : std::to_string(n) + "A";
    return with_d ? base + "+D" : base;
}

const std::vector<AppendixRow>& appendix_rows() {
    static const std::vector<AppendixRow> rows = [] {
        std::vector<AppendixRow> out;
        std::istringstream in(detail::kAppendixPointsText);
        std::string line;
        while (std::getline(in, line)) {
            if (line.empty() || line[0] == '#') continue;
            std::vector<std::string> fields = split_fields(line);
            if (fields.size() != 4)
                throw std::logic_error("appendix_rows: malformed line '" + line + "'");
            auto [n, with_d] = parse_point_label(fields[0]);
            out.push_back(AppendixRow{
                fields[0], n, with_d,
                ProjectiveTriple::parse(fields[1], Form::minimal),
                ProjectiveTriple::parse(fields[2], Form::weierstrass),
                ProjectiveTriple::parse(fields[3], Form::cubic),
            });
        }
        if (out.size() != 20) throw std::logic_error("appendix_rows: expected 20 rows");
        return out;
    }();
    return rows;
}

const std::vector<AppendixErratum>& appendix_errata() {
    static const std::vector<AppendixErratum> errata = [] {
        std::vector<AppendixErratum> out;
        std::istringstream in(detail::kAppendixErrataText);
        std::string line;
        while (std::getline(in, line)) {
            if (line.empty() || line[0] == '#') continue;
            std::vector<std::string> fields = split_fields(line);
            if (fields.size() != 3)
                throw std::logic_error("appendix_errata: malformed line '" + line + "'");
            out.push_back(AppendixErratum{fields[0], parse_form_name(fields[1]), fields[2]});
        }
        return out;
    }();
    return errata;
}

}  // namespace sharygin
