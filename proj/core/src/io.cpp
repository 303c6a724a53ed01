#include "qsteiner/io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace qsteiner {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

std::uint64_t parse_u64(const std::string& tok, const std::string& what) {
    try {
        std::size_t pos = 0;
        const std::uint64_t v = std::stoull(tok, &pos);
        if (pos != tok.size()) throw std::invalid_argument(tok);
        return v;
    } catch (const std::exception&) {
        throw IoError("cannot parse " + what + " from '" + tok + "'");
    }
}

std::vector<std::uint32_t> parse_u32_csv(const std::string& text,
                                         const std::string& what) {
    std::vector<std::uint32_t> out;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        out.push_back(static_cast<std::uint32_t>(parse_u64(trim(tok), what)));
    }
    if (out.empty()) throw IoError(what + " list is empty");
    return out;
}

std::ifstream open_in(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path + " for reading");
    return in;
}

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot open " + path + " for writing");
    return out;
}

// Shared header parser for field-spec and structure files. Returns leftover
// representative lines (digit-initial) for the structure reader.
struct Header {
    FieldSpec spec;
    bool have_p = false, have_n = false, have_poly = false;
    std::uint32_t k = 0;
    bool have_k = false;
    std::vector<std::string> body;
    std::string provenance;
};

Header parse_header(std::istream& in) {
    Header h;
    std::string line;
    while (std::getline(in, line)) {
        line = trim(line);
        if (line.empty()) continue;
        if (line[0] == '#') {
            std::string note = trim(line.substr(1));
            if (!note.empty()) {
                if (!h.provenance.empty()) h.provenance += '\n';
                h.provenance += note;
            }
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(line[0]))) {
            h.body.push_back(line);
            continue;
        }
        const auto sp = line.find_first_of(" \t");
        if (sp == std::string::npos) {
            throw IoError("malformed line '" + line + "'");
        }
        const std::string key = line.substr(0, sp);
        const std::string value = trim(line.substr(sp + 1));
        if (key == "p") {
            h.spec.p = static_cast<std::uint32_t>(parse_u64(value, "p"));
            h.have_p = true;
        } else if (key == "n") {
            h.spec.n = static_cast<std::uint32_t>(parse_u64(value, "n"));
            h.have_n = true;
        } else if (key == "k") {
            h.k = static_cast<std::uint32_t>(parse_u64(value, "k"));
            h.have_k = true;
        } else if (key == "poly") {
            h.spec.poly = parse_u32_csv(value, "poly coefficient");
            h.have_poly = true;
        } else {
            throw IoError("unknown key '" + key + "'");
        }
    }
    if (!h.have_p || !h.have_n || !h.have_poly) {
        throw IoError("missing one of the required keys p, n, poly");
    }
    return h;
}

void write_spec_lines(std::ostream& out, const FieldSpec& spec) {
    out << "p " << spec.p << "\n";
    out << "n " << spec.n << "\n";
    std::string poly;
    for (std::size_t i = 0; i < spec.poly.size(); ++i) {
        if (i) poly += ',';
        poly += std::to_string(spec.poly[i]);
    }
    out << "poly " << poly << "\n";
}

} // namespace

std::vector<std::uint32_t> parse_exponent_list(const std::string& text) {
    auto exps = parse_u32_csv(text, "exponent");
    return exps;
}

std::string format_exponent_list(const std::vector<std::uint32_t>& exps) {
    std::string out;
    for (std::size_t i = 0; i < exps.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(exps[i]);
    }
    return out;
}

FieldSpec read_field_spec(std::istream& in) {
    Header h = parse_header(in);
    if (!h.body.empty()) {
        throw IoError("unexpected representative line in a field spec file");
    }
    return h.spec;
}

FieldSpec read_field_spec_file(const std::string& path) {
    auto in = open_in(path);
    return read_field_spec(in);
}

void write_field_spec(std::ostream& out, const FieldSpec& spec) {
    write_spec_lines(out, spec);
}

void write_field_spec_file(const std::string& path, const FieldSpec& spec) {
    auto out = open_out(path);
    write_field_spec(out, spec);
}

StructureFile read_structure(std::istream& in) {
    Header h = parse_header(in);
    if (!h.have_k) throw IoError("structure file is missing key k");
    if (h.body.empty()) throw IoError("structure file has no representatives");
    StructureFile f;
    f.spec = h.spec;
    f.k = h.k;
    f.provenance = h.provenance;
    f.reps.reserve(h.body.size());
    for (const std::string& line : h.body) {
        f.reps.push_back(parse_exponent_list(line));
    }
    return f;
}

StructureFile read_structure_file(const std::string& path) {
    auto in = open_in(path);
    return read_structure(in);
}

void write_structure(std::ostream& out, const SteinerStructure& s) {
    write_spec_lines(out, s.spec);
    out << "k " << s.k << "\n";
    if (!s.provenance.empty()) {
        std::stringstream ss(s.provenance);
        std::string line;
        while (std::getline(ss, line)) out << "# " << line << "\n";
    }
    for (const Subspace& rep : s.reps) {
        out << format_exponent_list(rep.elements) << "\n";
    }
}

void write_structure_file(const std::string& path, const SteinerStructure& s) {
    auto out = open_out(path);
    write_structure(out, s);
}

SteinerStructure bind_structure(const FieldTables& tables,
                                const StructureFile& file) {
    if (tables.spec() != file.spec) {
        throw IoError("structure file header does not match the field");
    }
    SteinerStructure s;
    s.spec = file.spec;
    s.k = file.k;
    s.provenance = file.provenance;
    s.reps.reserve(file.reps.size());
    for (const auto& exps : file.reps) {
        Subspace rep = subspace_from_exponents(tables, exps);
        if (rep.dim != file.k) {
            throw IoError("representative " + format_exponent_list(exps) +
                          " has dimension " + std::to_string(rep.dim) +
                          ", header says " + std::to_string(file.k));
        }
        s.reps.push_back(std::move(rep));
    }
    return s;
}

ExactCoverInstance read_instance(std::istream& in) {
    ExactCoverInstance inst;
    std::string line;
    bool have_universe = false;
    while (std::getline(in, line)) {
        line = trim(line);
        if (line.empty() || line[0] == '#') continue;
        std::stringstream ss(line);
        std::string tok;
        ss >> tok;
        if (!have_universe) {
            if (tok != "universe") {
                throw IoError("instance file must start with 'universe <G>'");
            }
            ss >> tok;
            inst.universe_size =
                static_cast<std::uint32_t>(parse_u64(tok, "universe size"));
            have_universe = true;
            continue;
        }
        ExactCoverInstance::Row row;
        row.id = static_cast<std::uint32_t>(parse_u64(tok, "set id"));
        while (ss >> tok) {
            row.cols.push_back(
                static_cast<std::uint32_t>(parse_u64(tok, "column")));
        }
        inst.rows.push_back(std::move(row));
    }
    if (!have_universe) throw IoError("instance file is empty");
    return inst;
}

ExactCoverInstance read_instance_file(const std::string& path) {
    auto in = open_in(path);
    return read_instance(in);
}

void write_instance(std::ostream& out, const ExactCoverInstance& inst) {
    out << "universe " << inst.universe_size << "\n";
    for (const auto& row : inst.rows) {
        out << row.id;
        for (std::uint32_t c : row.cols) out << ' ' << c;
        out << "\n";
    }
}

void write_instance_file(const std::string& path,
                         const ExactCoverInstance& inst) {
    auto out = open_out(path);
    write_instance(out, inst);
}

void write_solution(std::ostream& out, const SolveOutcome& outcome,
                    std::uint64_t seed) {
    if (!outcome.solutions.empty()) {
        for (std::uint32_t id : outcome.solutions.front().ids) {
            out << id << "\n";
        }
    }
    const char* status = outcome.status == SolveStatus::SolutionFound
                             ? "solution"
                             : (outcome.status == SolveStatus::Exhausted
                                    ? "exhausted"
                                    : "budget-exceeded");
    out << "# outcome " << status << "\n";
    out << "# nodes " << outcome.stats.nodes << "\n";
    out << "# max-depth " << outcome.stats.max_depth << "\n";
    out << "# solutions " << outcome.stats.solutions_found << "\n";
    out << "# complete " << (outcome.stats.complete ? 1 : 0) << "\n";
    out << "# seed " << seed << "\n";
}

void write_solution_file(const std::string& path, const SolveOutcome& outcome,
                         std::uint64_t seed) {
    auto out = open_out(path);
    write_solution(out, outcome, seed);
}

std::vector<std::uint32_t> read_solution_ids(std::istream& in) {
    std::vector<std::uint32_t> ids;
    std::string line;
    while (std::getline(in, line)) {
        line = trim(line);
        if (line.empty() || line[0] == '#') continue;
        ids.push_back(static_cast<std::uint32_t>(parse_u64(line, "set id")));
    }
    return ids;
}

std::vector<std::uint32_t> read_solution_ids_file(const std::string& path) {
    auto in = open_in(path);
    return read_solution_ids(in);
}

namespace {

bool signatures_disjoint(const std::vector<std::uint32_t>& a,
                         const std::vector<std::uint32_t>& b) {
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] == b[j]) return false;
        if (a[i] < b[j]) {
            ++i;
        } else {
            ++j;
        }
    }
    return true;
}

} // namespace

void write_conflict_graph(std::ostream& out,
                          const std::vector<CandidateOrbit>& candidates) {
    // DIMACS wants the edge count up front; count, then stream.
    std::uint64_t edges = 0;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
        for (std::size_t j = i + 1; j < candidates.size(); ++j) {
            if (signatures_disjoint(candidates[i].signature,
                                    candidates[j].signature)) {
                ++edges;
            }
        }
    }
    out << "p edge " << candidates.size() << ' ' << edges << "\n";
    for (std::size_t i = 0; i < candidates.size(); ++i) {
        for (std::size_t j = i + 1; j < candidates.size(); ++j) {
            if (signatures_disjoint(candidates[i].signature,
                                    candidates[j].signature)) {
                out << "e " << (i + 1) << ' ' << (j + 1) << "\n";
            }
        }
    }
}

void write_conflict_graph_file(
    const std::string& path, const std::vector<CandidateOrbit>& candidates) {
    auto out = open_out(path);
    write_conflict_graph(out, candidates);
}

} // namespace qsteiner
