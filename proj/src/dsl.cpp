#include "ctcsim/dsl.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>

namespace ctcsim::dsl {

std::string ParseError::message() const {
    return std::to_string(line) + ":" + std::to_string(column) + ": expected " +
           expected + ", found " + found;
}

namespace {

struct Token {
    std::string text;
    int column;   // 1-based
};

std::string lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return s;
}

bool valid_wire_name(const std::string& s) {
    if (s.empty() || !std::isalpha(static_cast<unsigned char>(s[0]))) return false;
    return std::all_of(s.begin() + 1, s.end(), [](unsigned char c) {
        return std::isalnum(c) || c == '_';
    });
}

std::optional<BellKind> bell_kind_from(const std::string& lowered) {
    if (lowered == "phi+") return BellKind::PhiPlus;
    if (lowered == "phi-") return BellKind::PhiMinus;
    if (lowered == "psi+") return BellKind::PsiPlus;
    if (lowered == "psi-") return BellKind::PsiMinus;
    return std::nullopt;
}

enum class WireUse { Fresh, Initialized, Used };

class Parser {
  public:
    explicit Parser(std::string_view source) : source_(source) {}

    ParseResult run() {
        split_lines();
        for (line_no_ = 1; line_no_ <= static_cast<int>(lines_.size()); ++line_no_) {
            if (error_) break;
            parse_line(lines_[static_cast<std::size_t>(line_no_ - 1)]);
        }
        if (error_) return *error_;
        return std::move(program_);
    }

  private:
    void split_lines() {
        std::string current;
        for (std::size_t i = 0; i < source_.size(); ++i) {
            const char c = source_[i];
            if (c == '\n') {
                lines_.push_back(std::move(current));
                current.clear();
            } else if (c == '\r') {
                if (i + 1 < source_.size() && source_[i + 1] == '\n') ++i;
                lines_.push_back(std::move(current));
                current.clear();
            } else {
                current += c;
            }
        }
        if (!current.empty()) lines_.push_back(std::move(current));
    }

    static std::vector<Token> tokenize(const std::string& line) {
        std::vector<Token> tokens;
        std::size_t i = 0;
        while (i < line.size()) {
            if (line[i] == '#') break;
            if (std::isspace(static_cast<unsigned char>(line[i]))) {
                ++i;
                continue;
            }
            const std::size_t start = i;
            while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i])) &&
                   line[i] != '#') {
                ++i;
            }
            tokens.push_back(Token{line.substr(start, i - start),
                                   static_cast<int>(start) + 1});
        }
        return tokens;
    }

    void fail(int column, std::string expected, std::string found) {
        error_ = ParseError{line_no_, column, std::move(expected), std::move(found)};
    }

    // Column of the last character of the last token: always a real position.
    int end_column(const std::vector<Token>& tokens) const {
        const Token& last = tokens.back();
        return last.column + static_cast<int>(last.text.size()) - 1;
    }

    const Token* need(const std::vector<Token>& tokens, std::size_t index,
                      const std::string& what) {
        if (index < tokens.size()) return &tokens[index];
        fail(end_column(tokens), what, "end of line");
        return nullptr;
    }

    bool reject_extra(const std::vector<Token>& tokens, std::size_t arity) {
        if (tokens.size() > arity) {
            fail(tokens[arity].column, "end of line", tokens[arity].text);
            return false;
        }
        return true;
    }

    const Token* wire_token(const std::vector<Token>& tokens, std::size_t index) {
        const Token* tok = need(tokens, index, "wire name");
        if (!tok) return nullptr;
        if (!valid_wire_name(tok->text)) {
            fail(tok->column, "wire name", tok->text);
            return nullptr;
        }
        if (!declared_.count(tok->text)) {
            fail(tok->column, "declared wire", tok->text);
            return nullptr;
        }
        return tok;
    }

    std::optional<BellKind> bell_token(const std::vector<Token>& tokens,
                                       std::size_t index) {
        const Token* tok = need(tokens, index, "bell kind (phi+|phi-|psi+|psi-)");
        if (!tok) return std::nullopt;
        const auto kind = bell_kind_from(lower(tok->text));
        if (!kind) fail(tok->column, "bell kind (phi+|phi-|psi+|psi-)", tok->text);
        return kind;
    }

    std::optional<int> bit_token(const std::vector<Token>& tokens, std::size_t index) {
        const Token* tok = need(tokens, index, "bit (0|1)");
        if (!tok) return std::nullopt;
        if (tok->text == "0") return 0;
        if (tok->text == "1") return 1;
        fail(tok->column, "bit (0|1)", tok->text);
        return std::nullopt;
    }

    bool mark_initialized(const Token& tok) {
        auto& use = usage_[tok.text];
        if (use != WireUse::Fresh) {
            fail(tok.column, "uninitialized wire", tok.text);
            return false;
        }
        use = WireUse::Initialized;
        return true;
    }

    void mark_used(const std::string& wire) {
        auto& use = usage_[wire];
        if (use == WireUse::Fresh) use = WireUse::Used;
        else if (use == WireUse::Initialized) use = WireUse::Used;
    }

    void emit(StatementData data) {
        program_.statements.push_back(Statement{std::move(data), line_no_});
    }

    void parse_line(const std::string& line) {
        const std::vector<Token> tokens = tokenize(line);
        if (tokens.empty()) return;
        const std::string keyword = lower(tokens[0].text);

        if (keyword == "wires") return parse_wires(tokens);
        if (keyword == "bell") return parse_bell(tokens);
        if (keyword == "set") return parse_set(tokens);
        if (keyword == "x" || keyword == "z" || keyword == "h") {
            return parse_gate1(tokens, keyword);
        }
        if (keyword == "cnot" || keyword == "swap") return parse_gate2(tokens, keyword);
        if (keyword == "collapse") return parse_collapse(tokens);
        if (keyword == "postselect") return parse_postselect(tokens);
        if (keyword == "run") return parse_run(tokens);
        fail(tokens[0].column,
             "statement keyword (wires|bell|set|x|z|h|cnot|swap|collapse|postselect|run)",
             tokens[0].text);
    }

    void parse_wires(const std::vector<Token>& tokens) {
        if (tokens.size() < 2) {
            fail(end_column(tokens), "wire name", "end of line");
            return;
        }
        WiresDecl decl;
        for (std::size_t i = 1; i < tokens.size(); ++i) {
            const Token& tok = tokens[i];
            if (!valid_wire_name(tok.text)) {
                fail(tok.column, "wire name", tok.text);
                return;
            }
            if (declared_.count(tok.text)) {
                fail(tok.column, "undeclared wire name", tok.text);
                return;
            }
            declared_.emplace(tok.text, declared_order_.size());
            declared_order_.push_back(tok.text);
            usage_[tok.text] = WireUse::Fresh;
            decl.names.push_back(tok.text);
        }
        emit(std::move(decl));
    }

    void parse_bell(const std::vector<Token>& tokens) {
        const auto kind = bell_token(tokens, 1);
        if (!kind) return;
        const Token* a = wire_token(tokens, 2);
        if (!a) return;
        const Token* b = wire_token(tokens, 3);
        if (!b) return;
        if (!reject_extra(tokens, 4)) return;
        if (a->text == b->text) {
            fail(b->column, "a distinct wire", b->text);
            return;
        }
        if (!mark_initialized(*a) || !mark_initialized(*b)) return;
        emit(InitBell{*kind, a->text, b->text});
    }

    void parse_set(const std::vector<Token>& tokens) {
        const Token* w = wire_token(tokens, 1);
        if (!w) return;
        const auto bit = bit_token(tokens, 2);
        if (!bit) return;
        if (!reject_extra(tokens, 3)) return;
        if (!mark_initialized(*w)) return;
        emit(InitBasis{w->text, *bit});
    }

    bool check_gate_allowed(const Token& keyword_token) {
        if (postselect_seen_) {
            fail(keyword_token.column, "no gate after postselect", keyword_token.text);
            return false;
        }
        return true;
    }

    void parse_gate1(const std::vector<Token>& tokens, const std::string& name) {
        if (!check_gate_allowed(tokens[0])) return;
        const Token* w = wire_token(tokens, 1);
        if (!w) return;
        if (!reject_extra(tokens, 2)) return;
        mark_used(w->text);
        emit(GateStmt{name, {w->text}});
    }

    void parse_gate2(const std::vector<Token>& tokens, const std::string& name) {
        if (!check_gate_allowed(tokens[0])) return;
        const Token* a = wire_token(tokens, 1);
        if (!a) return;
        const Token* b = wire_token(tokens, 2);
        if (!b) return;
        if (!reject_extra(tokens, 3)) return;
        if (a->text == b->text) {
            fail(b->column, "a distinct wire", b->text);
            return;
        }
        mark_used(a->text);
        mark_used(b->text);
        emit(GateStmt{name, {a->text, b->text}});
    }

    void parse_collapse(const std::vector<Token>& tokens) {
        const Token* w = wire_token(tokens, 1);
        if (!w) return;
        const Token* basis_tok = need(tokens, 2, "basis (std|diag)");
        if (!basis_tok) return;
        const std::string lowered = lower(basis_tok->text);
        if (lowered != "std" && lowered != "diag") {
            fail(basis_tok->column, "basis (std|diag)", basis_tok->text);
            return;
        }
        const auto bit = bit_token(tokens, 3);
        if (!bit) return;
        if (!reject_extra(tokens, 4)) return;
        mark_used(w->text);
        collapse_seen_ = true;
        emit(CollapseStmt{w->text,
                          lowered == "std" ? Basis::Standard : Basis::Diagonal, *bit});
    }

    void parse_postselect(const std::vector<Token>& tokens) {
        if (postselect_seen_) {
            fail(tokens[0].column, "at most one postselect statement", tokens[0].text);
            return;
        }
        const Token* a = wire_token(tokens, 1);
        if (!a) return;
        const Token* b = wire_token(tokens, 2);
        if (!b) return;
        const auto kind = bell_token(tokens, 3);
        if (!kind) return;
        if (!reject_extra(tokens, 4)) return;
        if (a->text == b->text) {
            fail(b->column, "a distinct wire", b->text);
            return;
        }
        mark_used(a->text);
        mark_used(b->text);
        postselect_seen_ = true;
        emit(PostselectStmt{a->text, b->text, *kind});
    }

    void parse_run(const std::vector<Token>& tokens) {
        if (run_seen_) {
            fail(tokens[0].column, "at most one run statement", tokens[0].text);
            return;
        }
        const Token* mode_tok = need(tokens, 1, "run mode (pctc|scan|dctc)");
        if (!mode_tok) return;
        const std::string mode = lower(mode_tok->text);
        if (mode == "pctc") {
            if (!reject_extra(tokens, 2)) return;
            run_seen_ = true;
            emit(RunStmt{RunMode::Pctc, {}});
            return;
        }
        if (mode == "scan") {
            if (!reject_extra(tokens, 2)) return;
            const std::vector<std::string> canonical{"B", "A", "C1", "C2"};
            if (declared_order_ != canonical) {
                fail(mode_tok->column, "wires declared as B A C1 C2 for scan",
                     mode_tok->text);
                return;
            }
            run_seen_ = true;
            emit(RunStmt{RunMode::Scan, {}});
            return;
        }
        if (mode == "dctc") {
            if (postselect_seen_) {
                fail(mode_tok->column, "no postselect in a dctc program", mode_tok->text);
                return;
            }
            if (collapse_seen_) {
                fail(mode_tok->column, "no collapse in a dctc program", mode_tok->text);
                return;
            }
            if (tokens.size() < 3) {
                fail(end_column(tokens), "loop wire name", "end of line");
                return;
            }
            RunStmt stmt{RunMode::Dctc, {}};
            for (std::size_t i = 2; i < tokens.size(); ++i) {
                const Token* w = wire_token(tokens, i);
                if (!w) return;
                if (std::find(stmt.ctc_wires.begin(), stmt.ctc_wires.end(), w->text) !=
                    stmt.ctc_wires.end()) {
                    fail(w->column, "a distinct loop wire", w->text);
                    return;
                }
                if (usage_[w->text] == WireUse::Initialized) {
                    fail(w->column, "an uninitialized loop wire", w->text);
                    return;
                }
                stmt.ctc_wires.push_back(w->text);
            }
            run_seen_ = true;
            emit(std::move(stmt));
            return;
        }
        fail(mode_tok->column, "run mode (pctc|scan|dctc)", mode_tok->text);
    }

    std::string_view source_;
    std::vector<std::string> lines_;
    int line_no_ = 1;
    Program program_;
    std::optional<ParseError> error_;

    std::map<std::string, std::size_t> declared_;
    std::vector<std::string> declared_order_;
    std::map<std::string, WireUse> usage_;
    bool postselect_seen_ = false;
    bool collapse_seen_ = false;
    bool run_seen_ = false;
};

struct Printer {
    std::string& out;

    void operator()(const WiresDecl& s) {
        out += "wires";
        for (const auto& n : s.names) {
            out += ' ';
            out += n;
        }
    }
    void operator()(const InitBell& s) {
        out += "bell ";
        out += bell_kind_name(s.kind);
        out += ' ';
        out += s.a;
        out += ' ';
        out += s.b;
    }
    void operator()(const InitBasis& s) {
        out += "set ";
        out += s.wire;
        out += ' ';
        out += std::to_string(s.bit);
    }
    void operator()(const GateStmt& s) {
        out += s.gate;
        for (const auto& t : s.targets) {
            out += ' ';
            out += t;
        }
    }
    void operator()(const CollapseStmt& s) {
        out += "collapse ";
        out += s.wire;
        out += ' ';
        out += basis_name(s.basis);
        out += ' ';
        out += std::to_string(s.outcome);
    }
    void operator()(const PostselectStmt& s) {
        out += "postselect ";
        out += s.a;
        out += ' ';
        out += s.b;
        out += ' ';
        out += bell_kind_name(s.kind);
    }
    void operator()(const RunStmt& s) {
        out += "run ";
        switch (s.mode) {
        case RunMode::Pctc: out += "pctc"; break;
        case RunMode::Scan: out += "scan"; break;
        case RunMode::Dctc:
            out += "dctc";
            for (const auto& w : s.ctc_wires) {
                out += ' ';
                out += w;
            }
            break;
        }
    }
};

}  // namespace

ParseResult parse(std::string_view source) {
    return Parser(source).run();
}

std::string print(const Program& program) {
    std::string out;
    for (const auto& stmt : program.statements) {
        std::visit(Printer{out}, stmt.data);
        out += '\n';
    }
    return out;
}

}  // namespace ctcsim::dsl
