#pragma once

#include <graphring/graph.hpp>
#include <graphring/ops.hpp>

#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace graphring {

/// Syntax tree of a graph expression.
///
///   atom := "k"INT | "c"INT | "e"INT | "kg(" INT "," INT ")" | "petersen" | "file:"PATH
///   expr := atom | "join(" expr "," expr ")" | "disj(" expr "," expr ")" | "lex(" expr "," expr ")"
///         | "blow(" expr "," INT ")" | "frac(" expr "," INT ")" | "compl(" expr ")" | "pow(" expr "," INT ")"
struct GraphExpr {
    enum class Kind { Complete, Cycle, Edgeless, Kneser, Petersen, File, Join, Disjunctive, Lexicographic, Blowup, Fractionalize, Complement, Power };

    Kind kind = Kind::Complete;
    std::vector<std::size_t> ints;
    std::string path;
    std::vector<GraphExpr> args;
    std::size_t position = 0;

    [[nodiscard]] auto to_string() const -> std::string
    {
        auto num = [&](std::size_t i) { return std::to_string(ints[i]); };
        switch (kind) {
            case Kind::Complete: return "k" + num(0);
            case Kind::Cycle: return "c" + num(0);
            case Kind::Edgeless: return "e" + num(0);
            case Kind::Kneser: return "kg(" + num(0) + "," + num(1) + ")";
            case Kind::Petersen: return "petersen";
            case Kind::File: return "file:" + path;
            case Kind::Join: return "join(" + args[0].to_string() + "," + args[1].to_string() + ")";
            case Kind::Disjunctive: return "disj(" + args[0].to_string() + "," + args[1].to_string() + ")";
            case Kind::Lexicographic: return "lex(" + args[0].to_string() + "," + args[1].to_string() + ")";
            case Kind::Blowup: return "blow(" + args[0].to_string() + "," + num(0) + ")";
            case Kind::Fractionalize: return "frac(" + args[0].to_string() + "," + num(0) + ")";
            case Kind::Complement: return "compl(" + args[0].to_string() + ")";
            case Kind::Power: return "pow(" + args[0].to_string() + "," + num(0) + ")";
        }
        return "?";
    }
};

namespace detail {
    class ExprParser {
    public:
        explicit ExprParser(std::string_view text) : _text(text) {}

        auto parse() -> GraphExpr
        {
            auto e = expr();
            skip_space();
            if (_pos != _text.size())
                throw ParseError(_pos, "unexpected trailing text '" + std::string(_text.substr(_pos)) + "'");
            return e;
        }

    private:
        void skip_space()
        {
            while (_pos < _text.size() && std::isspace(static_cast<unsigned char>(_text[_pos])))
                ++_pos;
        }

        void expect(char c)
        {
            skip_space();
            if (_pos >= _text.size() || _text[_pos] != c)
                throw ParseError(_pos, std::string("expected '") + c + "'");
            ++_pos;
        }

        auto integer() -> std::size_t
        {
            skip_space();
            auto start = _pos;
            std::size_t v = 0;
            while (_pos < _text.size() && std::isdigit(static_cast<unsigned char>(_text[_pos]))) {
                v = v * 10 + static_cast<std::size_t>(_text[_pos] - '0');
                if (v > 1'000'000'000)
                    throw ParseError(start, "integer too large");
                ++_pos;
            }
            if (_pos == start)
                throw ParseError(start, "expected an integer");
            return v;
        }

        auto word() -> std::string
        {
            auto start = _pos;
            while (_pos < _text.size() && std::isalpha(static_cast<unsigned char>(_text[_pos])))
                ++_pos;
            return std::string(_text.substr(start, _pos - start));
        }

        auto expr() -> GraphExpr
        {
            skip_space();
            GraphExpr e;
            e.position = _pos;
            auto name = word();
            using K = GraphExpr::Kind;
            if ((name == "k" || name == "c" || name == "e") && _pos < _text.size() &&
                std::isdigit(static_cast<unsigned char>(_text[_pos]))) {
                e.kind = name == "k" ? K::Complete : name == "c" ? K::Cycle : K::Edgeless;
                e.ints.push_back(integer());
            }
            else if (name == "kg") {
                e.kind = K::Kneser;
                expect('(');
                e.ints.push_back(integer());
                expect(',');
                e.ints.push_back(integer());
                expect(')');
            }
            else if (name == "petersen")
                e.kind = K::Petersen;
            else if (name == "file") {
                if (_pos >= _text.size() || _text[_pos] != ':')
                    throw ParseError(_pos, "expected ':' after file");
                ++_pos;
                auto start = _pos;
                while (_pos < _text.size() && _text[_pos] != ',' && _text[_pos] != ')' &&
                    ! std::isspace(static_cast<unsigned char>(_text[_pos])))
                    ++_pos;
                if (_pos == start)
                    throw ParseError(start, "empty file path");
                e.kind = K::File;
                e.path = std::string(_text.substr(start, _pos - start));
            }
            else if (name == "join" || name == "disj" || name == "lex") {
                e.kind = name == "join" ? K::Join : name == "disj" ? K::Disjunctive : K::Lexicographic;
                expect('(');
                e.args.push_back(expr());
                expect(',');
                e.args.push_back(expr());
                expect(')');
            }
            else if (name == "blow" || name == "frac" || name == "pow") {
                e.kind = name == "blow" ? K::Blowup : name == "frac" ? K::Fractionalize : K::Power;
                expect('(');
                e.args.push_back(expr());
                expect(',');
                e.ints.push_back(integer());
                expect(')');
            }
            else if (name == "compl") {
                e.kind = K::Complement;
                expect('(');
                e.args.push_back(expr());
                expect(')');
            }
            else if (name.empty())
                throw ParseError(e.position, "expected a graph expression");
            else
                throw ParseError(e.position, "unknown constructor '" + name + "'");
            return e;
        }

        std::string_view _text;
        std::size_t _pos = 0;
    };
}

inline auto parse_expr(std::string_view text) -> GraphExpr { return detail::ExprParser(text).parse(); }

/// Parameter checks, run on the whole tree before anything is evaluated.
inline void validate_expr(const GraphExpr & e)
{
    using K = GraphExpr::Kind;
    auto fail = [&](const std::string & msg) {
        throw Error(ErrorKind::Eval, "at position " + std::to_string(e.position) + ": " + msg);
    };
    switch (e.kind) {
        case K::Cycle:
            if (e.ints[0] < 3)
                fail("cycle needs at least 3 vertices");
            break;
        case K::Kneser:
            if (e.ints[1] > e.ints[0])
                fail("kg(n,k) needs k <= n");
            break;
        case K::Blowup:
        case K::Fractionalize:
            if (e.ints[0] == 0)
                fail(std::string(e.kind == K::Blowup ? "blow" : "frac") + " needs d >= 1");
            break;
        default: break;
    }
    for (const auto & a : e.args)
        validate_expr(a);
}

inline auto eval_expr(const GraphExpr & e) -> Graph
{
    validate_expr(e);
    using K = GraphExpr::Kind;
    auto eval = [](auto & self, const GraphExpr & x) -> Graph {
        switch (x.kind) {
            case K::Complete: return complete(x.ints[0]);
            case K::Cycle: return cycle(x.ints[0]);
            case K::Edgeless: return edgeless(x.ints[0]);
            case K::Kneser: return kneser(x.ints[0], x.ints[1]);
            case K::Petersen: return petersen();
            case K::File: return read_edge_list_file(x.path);
            case K::Join: return join(self(self, x.args[0]), self(self, x.args[1]));
            case K::Disjunctive: return disjunctive(self(self, x.args[0]), self(self, x.args[1]));
            case K::Lexicographic: return lexicographic(self(self, x.args[0]), self(self, x.args[1]));
            case K::Blowup: return blowup(self(self, x.args[0]), x.ints[0]);
            case K::Fractionalize: return fractionalize(self(self, x.args[0]), x.ints[0]);
            case K::Complement: return complement(self(self, x.args[0]));
            case K::Power: return disjunctive_power(self(self, x.args[0]), x.ints[0]);
        }
        throw Error(ErrorKind::Eval, "unknown expression kind");
    };
    return eval(eval, e);
}

inline auto eval_expr(std::string_view text) -> Graph { return eval_expr(parse_expr(text)); }

} // namespace graphring
