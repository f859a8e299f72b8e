#include "knotdist/table.hpp"

#include <sstream>

namespace knotdist {

namespace {

BundledEntry matrix_entry(std::string label, IntMatrix m, const std::string& delta, int sigma, long det) {
    return {std::move(label), SeifertMatrix::validate(std::move(m)),
            KnotInvariants{parse_laurent(delta), sigma, Integer(det)}, ""};
}

std::string trim(std::string s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

}  // namespace

void self_check(const std::vector<BundledEntry>& entries) {
    for (const auto& e : entries) {
        if (!e.matrix) continue;
        const KnotInvariants fresh = invariants(*e.matrix);
        if (!(fresh == e.expected)) {
            throw std::logic_error("table entry " + e.label + ": stored invariants differ from the matrix");
        }
    }
}

KnotTable KnotTable::bundled() {
    KnotTable t;
    t.entries_.push_back(matrix_entry("3_1", IntMatrix{{-1, 1}, {0, -1}}, "t-1+t^-1", -2, 3));
    t.entries_.push_back(matrix_entry("4_1", IntMatrix{{1, 1}, {0, -1}}, "-t+3-t^-1", 0, 5));
    t.entries_.push_back({"9_25", std::nullopt, KnotInvariants{parse_laurent("-3t^2+12t-17+12t^-1-3t^-2"), -2, 47},
                          "no Seifert matrix bundled"});
    self_check(t.entries_);
    return t;
}

bool KnotTable::contains(const std::string& label) const {
    for (const auto& e : entries_)
        if (e.label == label) return true;
    return false;
}

const BundledEntry& KnotTable::find(const std::string& label) const {
    for (const auto& e : entries_)
        if (e.label == label) return e;
    throw Error(ErrorCode::UnknownLabel, "unknown knot label '" + label + "'");
}

void KnotTable::add(BundledEntry entry) {
    for (auto& e : entries_) {
        if (e.label == entry.label) {
            e = std::move(entry);
            return;
        }
    }
    entries_.push_back(std::move(entry));
}

std::size_t KnotTable::import_csv(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t line_no = 0;
    std::vector<BundledEntry> parsed;
    while (std::getline(in, line)) {
        ++line_no;
        line = trim(line);
        if (line.empty() || line[0] == '#') continue;
        std::vector<std::string> fields;
        std::istringstream row(line);
        std::string field;
        while (std::getline(row, field, ',')) fields.push_back(trim(field));
        if (line.back() == ',') fields.emplace_back();
        if (fields.size() == 4 && fields[0] == "label") continue;
        const std::string where = "row " + std::to_string(line_no) + ": ";
        if (fields.size() != 4) throw Error(ErrorCode::Parse, where + "expected 4 fields, got " + std::to_string(fields.size()));
        if (fields[0].empty()) throw Error(ErrorCode::Parse, where + "empty label");

        LaurentPoly delta;
        int sigma = 0;
        Integer det;
        try {
            delta = parse_laurent(fields[1]);
            std::size_t used = 0;
            sigma = std::stoi(fields[2], &used);
            if (used != fields[2].size()) throw std::invalid_argument("signature");
            if (det.set_str(fields[3], 10) != 0) throw std::invalid_argument("determinant");
        } catch (const Error& e) {
            throw Error(ErrorCode::Parse, where + e.what());
        } catch (const std::exception&) {
            throw Error(ErrorCode::Parse, where + "malformed signature or determinant");
        }
        if (!satisfies_seifert_conditions(delta)) {
            throw Error(ErrorCode::Parse, where + to_string(delta) + " is not an Alexander polynomial");
        }
        if (sigma % 2 != 0) throw Error(ErrorCode::Parse, where + "signature must be even");
        if (det != determinant_of_knot(delta)) {
            throw Error(ErrorCode::Parse, where + "determinant " + det.get_str() + " differs from |delta(-1)| = " +
                                              determinant_of_knot(delta).get_str());
        }
        parsed.push_back({fields[0], std::nullopt, KnotInvariants{delta, sigma, det}, "imported"});
    }
    for (auto& e : parsed) add(std::move(e));
    return parsed.size();
}

std::string describe(const BundledEntry& entry) {
    std::ostringstream os;
    os << "label: " << entry.label << '\n';
    if (entry.matrix) {
        os << "matrix: " << to_string(entry.matrix->entries()) << '\n';
    } else {
        os << "matrix: none\n";
    }
    os << "alexander: " << entry.expected.alexander << '\n';
    os << "signature: " << entry.expected.signature << '\n';
    os << "determinant: " << entry.expected.determinant << '\n';
    if (!entry.note.empty()) os << "note: " << entry.note << '\n';
    return os.str();
}

}  // namespace knotdist
