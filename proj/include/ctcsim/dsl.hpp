#pragma once

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "ctcsim/types.hpp"

namespace ctcsim::dsl {

// Line-oriented circuit language. One statement per line, `#` comments,
// case-insensitive keywords, wire names [A-Za-z][A-Za-z0-9_]*.
//
//   wires <name>+
//   bell <phi+|phi-|psi+|psi-> <w> <w>
//   set <w> <0|1>
//   x|z|h <w>
//   cnot <ctrl> <tgt>
//   swap <w> <w>
//   collapse <w> <std|diag> <0|1>
//   postselect <w> <w> <phi+|phi-|psi+|psi->
//   run <pctc|scan|dctc <ctc-wire>+>

struct WiresDecl {
    std::vector<std::string> names;
    bool operator==(const WiresDecl&) const = default;
};
struct InitBell {
    BellKind kind;
    WireId a, b;
    bool operator==(const InitBell&) const = default;
};
struct InitBasis {
    WireId wire;
    int bit;
    bool operator==(const InitBasis&) const = default;
};
struct GateStmt {
    std::string gate;   // "x","z","h","cnot","swap"
    std::vector<WireId> targets;
    bool operator==(const GateStmt&) const = default;
};
struct CollapseStmt {
    WireId wire;
    Basis basis;
    int outcome;
    bool operator==(const CollapseStmt&) const = default;
};
struct PostselectStmt {
    WireId a, b;
    BellKind kind;
    bool operator==(const PostselectStmt&) const = default;
};
enum class RunMode { Pctc, Scan, Dctc };
struct RunStmt {
    RunMode mode;
    std::vector<WireId> ctc_wires;   // dctc only
    bool operator==(const RunStmt&) const = default;
};

using StatementData = std::variant<WiresDecl, InitBell, InitBasis, GateStmt,
                                   CollapseStmt, PostselectStmt, RunStmt>;

struct Statement {
    StatementData data;
    int line = 0;   // 1-based source line; ignored by equality
    bool operator==(const Statement& other) const { return data == other.data; }
};

struct Program {
    std::vector<Statement> statements;
    bool operator==(const Program&) const = default;
};

struct ParseError {
    int line = 1;      // 1-based
    int column = 1;    // 1-based, always inside the source text
    std::string expected;
    std::string found;
    std::string message() const;
};

using ParseResult = std::variant<Program, ParseError>;

ParseResult parse(std::string_view source);

// Canonical rendering: lowercase keywords, single spaces, one statement per
// line. parse(print(p)) is structurally equal to p.
std::string print(const Program& program);

}  // namespace ctcsim::dsl
