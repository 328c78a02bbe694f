#include "scoper/pddl/sexpr.h"

#include <cctype>

namespace scoper::pddl {

std::string Sexpr::to_string() const {
    if (is_atom())
        return atom;
    std::string out = "(";
    for (std::size_t i = 0; i < items.size(); ++i) {
        if (i > 0)
            out += " ";
        out += items[i].to_string();
    }
    return out + ")";
}

namespace {

struct Token {
    enum class Kind { Open, Close, Atom };
    Kind kind;
    std::string text;
    int line;
};

std::vector<Token> tokenize(const std::string& text, const std::string& filename) {
    std::vector<Token> tokens;
    int line = 1;
    std::size_t i = 0;
    while (i < text.size()) {
        char c = text[i];
        if (c == '\n') {
            ++line;
            ++i;
        } else if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
        } else if (c == ';') {
            while (i < text.size() && text[i] != '\n')
                ++i;
        } else if (c == '(') {
            tokens.push_back({Token::Kind::Open, "(", line});
            ++i;
        } else if (c == ')') {
            tokens.push_back({Token::Kind::Close, ")", line});
            ++i;
        } else {
            std::string atom;
            while (i < text.size()) {
                char a = text[i];
                if (a == '(' || a == ')' || a == ';' ||
                    std::isspace(static_cast<unsigned char>(a)))
                    break;
                atom += static_cast<char>(std::tolower(static_cast<unsigned char>(a)));
                ++i;
            }
            tokens.push_back({Token::Kind::Atom, std::move(atom), line});
        }
    }
    (void)filename;
    return tokens;
}

}  // namespace

std::vector<Sexpr> parse_sexprs(const std::string& text, const std::string& filename) {
    std::vector<Token> tokens = tokenize(text, filename);
    std::vector<Sexpr> roots;
    std::vector<Sexpr> stack;  // open lists

    for (Token& token : tokens) {
        switch (token.kind) {
        case Token::Kind::Open: {
            Sexpr list;
            list.kind = Sexpr::Kind::List;
            list.line = token.line;
            stack.push_back(std::move(list));
            break;
        }
        case Token::Kind::Close: {
            if (stack.empty())
                throw ParseError(filename, token.line, "unmatched ')'");
            Sexpr done = std::move(stack.back());
            stack.pop_back();
            if (stack.empty())
                roots.push_back(std::move(done));
            else
                stack.back().items.push_back(std::move(done));
            break;
        }
        case Token::Kind::Atom: {
            Sexpr atom;
            atom.kind = Sexpr::Kind::Atom;
            atom.atom = std::move(token.text);
            atom.line = token.line;
            if (stack.empty())
                roots.push_back(std::move(atom));
            else
                stack.back().items.push_back(std::move(atom));
            break;
        }
        }
    }
    if (!stack.empty())
        throw ParseError(filename, stack.back().line, "unclosed '('");
    return roots;
}

}  // namespace scoper::pddl
