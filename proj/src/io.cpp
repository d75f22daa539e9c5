#include "projcoh/io.hpp"

#include <fstream>
#include <sstream>

namespace projcoh {

namespace {

// Token stream over the comment-stripped input.
class TokenReader {
public:
    explicit TokenReader(std::istream& in) {
        std::string line;
        std::size_t lineno = 0;
        while (std::getline(in, line)) {
            ++lineno;
            if (const auto hash = line.find('#'); hash != std::string::npos)
                line.erase(hash);
            std::istringstream ls(line);
            std::string tok;
            while (ls >> tok) tokens_.emplace_back(std::move(tok), lineno);
        }
    }

    std::int64_t next_int(const std::string& what) {
        if (pos_ >= tokens_.size())
            throw ParseError("unexpected end of input while reading " + what);
        const auto& [tok, line] = tokens_[pos_++];
        try {
            std::size_t used = 0;
            const std::int64_t v = std::stoll(tok, &used);
            if (used != tok.size()) throw std::invalid_argument(tok);
            return v;
        } catch (const std::exception&) {
            throw ParseError("bad token '" + tok + "' on line " + std::to_string(line) +
                             " while reading " + what);
        }
    }

    bool exhausted() const { return pos_ >= tokens_.size(); }
    std::size_t line_of_next() const {
        return pos_ < tokens_.size() ? tokens_[pos_].second : 0;
    }

private:
    std::vector<std::pair<std::string, std::size_t>> tokens_;
    std::size_t pos_ = 0;
};

}  // namespace

FiniteGroup read_group(std::istream& in, const std::string& name) {
    TokenReader tr(in);
    const std::int64_t n = tr.next_int("group order");
    if (n < 1 || n > 100000) throw ParseError("group order " + std::to_string(n) + " out of range");
    std::vector<std::vector<int>> table(static_cast<std::size_t>(n),
                                        std::vector<int>(static_cast<std::size_t>(n)));
    for (auto& row : table)
        for (auto& cell : row) cell = static_cast<int>(tr.next_int("table entry"));
    if (!tr.exhausted())
        throw ParseError("trailing data on line " + std::to_string(tr.line_of_next()));
    return FiniteGroup::from_cayley_table(table, name);
}

void write_group(std::ostream& out, const FiniteGroup& g) {
    out << "# " << g.name() << "\n" << g.order() << "\n";
    for (int a = 0; a < g.order(); ++a) {
        for (int b = 0; b < g.order(); ++b) out << (b ? " " : "") << g.op(a, b);
        out << "\n";
    }
}

Cochain read_cochain(std::istream& in, const FiniteGroup& g) {
    TokenReader tr(in);
    const std::int64_t degree = tr.next_int("cochain degree");
    const std::int64_t modulus = tr.next_int("cochain modulus");
    const std::int64_t n = tr.next_int("group order");
    if (degree < 0 || degree > 4) throw ParseError("cochain degree out of range [0, 4]");
    if (n != g.order())
        throw ParseError("cochain file is over a group of order " + std::to_string(n) +
                         ", expected " + std::to_string(g.order()));
    Cochain c(g, static_cast<int>(degree), modulus);
    for (std::size_t i = 0; i < c.size(); ++i) c.set_index(i, tr.next_int("cochain value"));
    if (!tr.exhausted())
        throw ParseError("trailing data on line " + std::to_string(tr.line_of_next()));
    return c;
}

void write_cochain(std::ostream& out, const Cochain& c) {
    out << c.degree() << " " << c.modulus() << "\n" << c.group().order() << "\n";
    const std::size_t per_line =
        c.degree() == 0 ? 1 : static_cast<std::size_t>(c.group().order());
    for (std::size_t i = 0; i < c.size(); ++i)
        out << c.at_index(i) << ((i + 1) % per_line == 0 ? "\n" : " ");
}

FiniteGroup read_group_file(const std::string& path, const std::string& name) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open group file '" + path + "'");
    return read_group(in, name.empty() ? path : name);
}

Cochain read_cochain_file(const std::string& path, const FiniteGroup& g) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open cochain file '" + path + "'");
    return read_cochain(in, g);
}

void write_group_file(const std::string& path, const FiniteGroup& g) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot open '" + path + "' for writing");
    write_group(out, g);
}

}  // namespace projcoh
