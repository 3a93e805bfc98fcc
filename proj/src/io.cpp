#include "adic/io.hpp"

#include <fstream>
#include <sstream>

#include "adic/parse.hpp"

namespace adic {

namespace {

std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (start <= s.size()) {
        std::size_t end = s.find(sep, start);
        out.push_back(trim(s.substr(
            start, end == std::string::npos ? std::string::npos
                                            : end - start)));
        if (end == std::string::npos) break;
        start = end + 1;
    }
    return out;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

// Lines of interest, comments and blanks removed.
std::vector<std::string> content_lines(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        out.push_back(t);
    }
    return out;
}

bool take_prefix(const std::string& line, const std::string& key,
                 std::string& rest) {
    if (line.compare(0, key.size(), key) != 0) return false;
    rest = trim(line.substr(key.size()));
    return true;
}

Domain parse_field(const std::string& rest) {
    if (rest == "Q") return Domain{};
    std::istringstream is(rest);
    std::string tag;
    std::uint64_t p = 0;
    if ((is >> tag >> p) && tag == "Fp" && p >= 2) return Domain{p};
    throw std::runtime_error("bad field line: expected 'Q' or 'Fp <prime>'");
}

struct ParsedBlock {
    ModulePtr module;
    std::vector<std::vector<Polynomial>> psi;
    bool has_psi = false;
};

ParsedBlock parse_block(const std::vector<std::string>& lines,
                        std::uint32_t degree_cap) {
    std::optional<Domain> field;
    std::optional<AdicIdeal> ideal;
    std::optional<std::uint32_t> rank;
    std::vector<std::vector<Polynomial>> rels;
    ParsedBlock out;

    for (auto& line : lines) {
        std::string rest;
        if (take_prefix(line, "field:", rest)) {
            field = parse_field(rest);
        } else if (take_prefix(line, "ideal:", rest)) {
            if (!field) throw std::runtime_error("ideal line before field");
            ideal = parse_ideal_spec(rest, *field, degree_cap);
        } else if (take_prefix(line, "gens:", rest)) {
            rank = static_cast<std::uint32_t>(std::stoul(rest));
        } else if (take_prefix(line, "rel:", rest)) {
            if (!field) throw std::runtime_error("rel line before field");
            rels.push_back(poly_parse_vector(rest, *field, ','));
        } else if (take_prefix(line, "psi:", rest)) {
            if (!field) throw std::runtime_error("psi line before field");
            out.has_psi = true;
            for (auto& row : split(rest, ';'))
                out.psi.push_back(poly_parse_vector(row, *field, ','));
        } else {
            throw std::runtime_error("unrecognized line: " + line);
        }
    }
    if (!field) throw std::runtime_error("missing field line");
    if (!ideal) throw std::runtime_error("missing ideal line");
    if (!rank) throw std::runtime_error("missing gens line");
    out.module = ModulePresentation::make(*field, *ideal, *rank, rels);
    return out;
}

}  // namespace

AdicIdeal parse_ideal_spec(const std::string& spec, Domain d,
                           std::uint32_t degree_cap) {
    std::string s = trim(spec);
    std::string rest;
    if (take_prefix(s, "vars", rest)) {
        if (rest == "*") return AdicIdeal::all_variables();
        std::set<std::uint32_t> vars;
        std::istringstream is(rest);
        std::string tok;
        while (is >> tok) {
            if (tok.size() < 2 || tok[0] != 't')
                throw std::runtime_error("bad variable token '" + tok +
                                         "' in ideal spec");
            vars.insert(static_cast<std::uint32_t>(
                std::stoul(tok.substr(1))));
        }
        if (vars.empty())
            throw std::runtime_error("ideal spec names no variables");
        return AdicIdeal::variables(std::move(vars));
    }
    if (take_prefix(s, "gens", rest)) {
        std::vector<Polynomial> gens;
        for (auto& piece : split(rest, ';'))
            gens.push_back(poly_parse(piece, d));
        return AdicIdeal::general(std::move(gens), degree_cap);
    }
    throw std::runtime_error(
        "ideal spec must start with 'vars' or 'gens': " + s);
}

ModulePtr parse_presentation(const std::string& text,
                             std::uint32_t degree_cap) {
    ParsedBlock b = parse_block(content_lines(text), degree_cap);
    if (b.has_psi)
        throw std::runtime_error("psi line in a plain presentation file");
    return b.module;
}

ModulePtr load_presentation(const std::string& path,
                            std::uint32_t degree_cap) {
    return parse_presentation(read_file(path), degree_cap);
}

AdicSystem parse_system(const std::string& text, std::uint32_t degree_cap) {
    auto lines = content_lines(text);
    AdicSystem sys;
    std::vector<std::vector<std::string>> blocks;
    for (auto& line : lines) {
        std::string rest;
        if (take_prefix(line, "level", rest) && !rest.empty() &&
            rest.back() == ':') {
            std::uint32_t idx = static_cast<std::uint32_t>(
                std::stoul(rest.substr(0, rest.size() - 1)));
            if (idx != blocks.size())
                throw std::runtime_error(
                    "level blocks must appear in order starting at 0");
            blocks.emplace_back();
        } else {
            if (blocks.empty())
                throw std::runtime_error("content before the first level");
            blocks.back().push_back(line);
        }
    }
    if (blocks.empty()) throw std::runtime_error("empty system file");
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        ParsedBlock b = parse_block(blocks[i], degree_cap);
        if (i == 0 && b.has_psi)
            throw std::runtime_error("level 0 cannot have a psi line");
        if (i > 0 && !b.has_psi)
            throw std::runtime_error("level " + std::to_string(i) +
                                     " is missing its psi line");
        if (i > 0) {
            std::uint32_t prev_rank = sys.levels[i - 1].module->rank();
            if (b.psi.size() != prev_rank)
                throw std::runtime_error(
                    "psi row count must match the previous level's rank");
            for (auto& row : b.psi)
                if (row.size() != b.module->rank())
                    throw std::runtime_error(
                        "psi column count must match this level's rank");
        }
        sys.levels.push_back(SystemLevel{b.module, std::move(b.psi)});
    }
    return sys;
}

AdicSystem load_system(const std::string& path, std::uint32_t degree_cap) {
    return parse_system(read_file(path), degree_cap);
}

}  // namespace adic
