#include "algorec/java_parser.hpp"

#include "algorec/ast_normalize.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <thread>

namespace algorec::java {

namespace {

const char* const kPrimitiveTypes[] = {"boolean", "byte",  "char", "short",
                                       "int",     "long",  "float", "double",
                                       "void"};

bool isPrimitiveType(const Token& t) {
    if (t.type != TokenType::Keyword) return false;
    for (const char* p : kPrimitiveTypes) {
        if (t.text == p) return true;
    }
    return false;
}

bool isModifier(const Token& t) {
    static const char* const mods[] = {
        "public", "private",   "protected", "static",   "final",
        "native", "abstract",  "transient", "volatile", "strictfp",
        "default", "synchronized",
    };
    if (t.type != TokenType::Keyword && !t.isIdent("sealed")) return false;
    for (const char* m : mods) {
        if (t.text == m) return true;
    }
    return t.isIdent("sealed");
}

struct Parser {
    std::vector<Token> tokens;
    std::size_t pos = 0;
    std::string path;
    std::shared_ptr<const std::string> sharedPath;
    NodeId nextId = 1;

    const Token& cur(std::size_t ahead = 0) const {
        std::size_t i = std::min(pos + ahead, tokens.size() - 1);
        return tokens[i];
    }
    const Token& take() {
        const Token& t = tokens[std::min(pos, tokens.size() - 1)];
        if (pos < tokens.size() - 1) ++pos;
        return t;
    }
    bool atEnd() const { return cur().type == TokenType::End; }

    [[noreturn]] void fail(const std::string& message) const {
        throw ParseError(path, cur().line, cur().col, message);
    }

    bool eatPunct(const char* s) {
        if (cur().isPunct(s)) {
            take();
            return true;
        }
        return false;
    }
    void expectPunct(const char* s) {
        if (!eatPunct(s)) fail(std::string("expected '") + s + "'");
    }
    bool eatKeyword(const char* s) {
        if (cur().isKeyword(s)) {
            take();
            return true;
        }
        return false;
    }

    // --- node construction -------------------------------------------------

    AstNode node(NodeKind kind, const Token& from) {
        AstNode n;
        n.id = nextId++;
        n.kind = kind;
        n.span.file = sharedPath;
        n.span.startLine = from.line;
        n.span.startCol = from.col;
        n.span.endLine = from.endLine;
        n.span.endCol = from.endCol;
        return n;
    }
    AstNode other(const std::string& label, const Token& from) {
        AstNode n = node(NodeKind::Other, from);
        n.label = label;
        return n;
    }
    void closeSpan(AstNode& n, const Token& last) {
        n.span.endLine = last.endLine;
        n.span.endCol = last.endCol;
    }
    void closeSpanToPrev(AstNode& n) {
        closeSpan(n, tokens[pos > 0 ? pos - 1 : 0]);
    }
    void growSpan(AstNode& parent, const AstNode& child) {
        if (child.span.startLine < parent.span.startLine ||
            (child.span.startLine == parent.span.startLine &&
             child.span.startCol < parent.span.startCol)) {
            parent.span.startLine = child.span.startLine;
            parent.span.startCol = child.span.startCol;
        }
        if (child.span.endLine > parent.span.endLine ||
            (child.span.endLine == parent.span.endLine &&
             child.span.endCol > parent.span.endCol)) {
            parent.span.endLine = child.span.endLine;
            parent.span.endCol = child.span.endCol;
        }
    }

    // --- trivia-level helpers ----------------------------------------------

    void skipAnnotations() {
        while (cur().isPunct("@")) {
            take();
            if (cur().isKeyword("interface")) return; // @interface declaration
            while (cur().isIdent()) {
                take();
                if (!eatPunct(".")) break;
            }
            if (cur().isPunct("(")) skipBalanced("(", ")");
        }
    }

    void skipBalanced(const char* open, const char* close) {
        expectPunct(open);
        int depth = 1;
        while (depth > 0 && !atEnd()) {
            if (cur().isPunct(open)) ++depth;
            if (cur().isPunct(close)) --depth;
            take();
        }
    }

    // Skips a balanced generic argument/parameter list starting at '<'.
    // ">>" and ">>>" tokens count as multiple closers.
    void skipTypeArgs() {
        int depth = 0;
        do {
            const Token& t = take();
            if (t.isPunct("<")) ++depth;
            else if (t.isPunct(">")) --depth;
            else if (t.isPunct(">>")) depth -= 2;
            else if (t.isPunct(">>>")) depth -= 3;
            else if (t.type == TokenType::End) fail("unterminated type arguments");
        } while (depth > 0);
    }

    // --- types ---------------------------------------------------------------

    // Attempts to parse a type at the current position. On success returns
    // a TypeRef node and leaves pos after the type; on failure restores pos
    // and returns nullopt.
    std::optional<AstNode> tryType() {
        std::size_t save = pos;
        const Token& start = cur();
        std::string base;
        std::string text;
        if (isPrimitiveType(cur())) {
            base = take().text;
            text = base;
        } else if (cur().isIdent()) {
            base = take().text;
            text = base;
            if (cur().isPunct("<")) {
                std::size_t beforeArgs = pos;
                skipTypeArgsLenient(beforeArgs);
                if (pos == beforeArgs) { // not a generic argument list
                    pos = save;
                    return std::nullopt;
                }
                text += "<>";
            }
            while (cur().isPunct(".") && cur(1).isIdent()) {
                take();
                base = take().text; // rightmost simple name
                text += "." + base;
                if (cur().isPunct("<")) {
                    std::size_t beforeArgs = pos;
                    skipTypeArgsLenient(beforeArgs);
                    if (pos == beforeArgs) {
                        pos = save;
                        return std::nullopt;
                    }
                    text += "<>";
                }
            }
        } else {
            return std::nullopt;
        }
        while (cur().isPunct("[") && cur(1).isPunct("]")) {
            take();
            take();
            text += "[]";
        }
        if (cur().isPunct("...")) { // vararg, type context only
            take();
            text += "...";
        }
        AstNode t = node(NodeKind::TypeRef, start);
        t.attrs["name"] = base;
        t.attrs["text"] = text;
        closeSpanToPrev(t);
        return t;
    }

    // Tries to skip a generic argument list. If the contents do not look
    // like types (e.g. `a < b`), pos is restored to `restore`.
    void skipTypeArgsLenient(std::size_t restore) {
        std::size_t save = pos;
        int depth = 0;
        std::size_t steps = 0;
        do {
            const Token& t = take();
            ++steps;
            if (t.isPunct("<")) ++depth;
            else if (t.isPunct(">")) --depth;
            else if (t.isPunct(">>")) depth -= 2;
            else if (t.isPunct(">>>")) depth -= 3;
            else if (t.isIdent() || t.isPunct(",") || t.isPunct("?") ||
                     t.isPunct(".") || t.isKeyword("extends") ||
                     t.isKeyword("super") || isPrimitiveType(t) ||
                     t.isPunct("[") || t.isPunct("]") || t.isPunct("&")) {
                // plausible type-argument content
            } else {
                pos = restore;
                (void)save;
                return;
            }
            if (steps > 256) {
                pos = restore;
                return;
            }
        } while (depth > 0 && !atEnd());
        if (depth != 0) pos = restore;
    }

    // --- compilation unit ------------------------------------------------------

    AstNode parseUnit() {
        AstNode unit = other("unit", cur());
        if (cur().isKeyword("package")) {
            while (!atEnd() && !eatPunct(";")) take();
        }
        skipAnnotations();
        while (cur().isKeyword("import")) {
            while (!atEnd() && !eatPunct(";")) take();
        }
        while (!atEnd()) {
            if (eatPunct(";")) continue;
            AstNode type = parseTypeDecl();
            growSpan(unit, type);
            unit.children.push_back(std::move(type));
        }
        closeSpanToPrev(unit);
        return unit;
    }

    AstNode parseTypeDecl() {
        const Token& start = cur();
        skipAnnotations();
        while (isModifier(cur())) take();
        skipAnnotations();
        bool isRecord = cur().isIdent("record") && cur(1).isIdent();
        if (!cur().isKeyword("class") && !cur().isKeyword("interface") &&
            !cur().isKeyword("enum") && !isRecord) {
            fail("expected type declaration");
        }
        std::string declKind = take().text;
        if (!cur().isIdent()) fail("expected type name");
        std::string name = take().text;

        AstNode cls = other("class", start);
        cls.attrs["name"] = name;
        cls.attrs["decl"] = declKind;

        if (cur().isPunct("<")) skipTypeArgs();
        if (isRecord && cur().isPunct("(")) skipBalanced("(", ")");
        while (!cur().isPunct("{") && !atEnd()) take(); // extends/implements/permits
        expectPunct("{");
        if (declKind == "enum") parseEnumConstants(cls, name);
        parseMembers(cls, name);
        closeSpanToPrev(cls);
        return cls;
    }

    void parseEnumConstants(AstNode& cls, const std::string& className) {
        while (cur().isIdent()) {
            take();
            if (cur().isPunct("(")) skipBalanced("(", ")");
            if (cur().isPunct("{")) {
                // constant class body; its members are ordinary entry points
                take();
                parseMembers(cls, className);
            }
            if (!eatPunct(",")) break;
        }
        eatPunct(";");
    }

    // Parses class members until the closing brace (consumed). A member the
    // grammar does not cover becomes an Other node; the rest of the class
    // still parses.
    void parseMembers(AstNode& cls, const std::string& className) {
        while (!atEnd() && !cur().isPunct("}")) {
            if (eatPunct(";")) continue;
            std::size_t save = pos;
            try {
                parseMember(cls, className);
            } catch (const ParseError&) {
                pos = save;
                AstNode bad = other("unparsed_member", cur());
                int depth = 0;
                while (!atEnd()) {
                    if (cur().isPunct("{")) ++depth;
                    if (cur().isPunct("}")) {
                        if (depth == 0) break;
                        --depth;
                    }
                    const Token& t = take();
                    if (depth == 0 && (t.isPunct(";") || t.isPunct("}"))) break;
                }
                if (pos == save) take();
                closeSpanToPrev(bad);
                cls.children.push_back(std::move(bad));
            }
        }
        expectPunct("}");
    }

    void parseMember(AstNode& cls, const std::string& className) {
        const Token& start = cur();
        skipAnnotations();
        bool isStatic = false;
        while (isModifier(cur())) {
            if (cur().isKeyword("static")) isStatic = true;
            take();
            skipAnnotations();
        }
        // initializer block
        if (cur().isPunct("{")) {
            AstNode init = node(NodeKind::Method, start);
            init.attrs["name"] = "";
            init.attrs["sig"] = "/0";
            init.attrs["arity"] = "0";
            init.attrs["init"] = isStatic ? "static" : "instance";
            AstNode params = other("params", cur());
            init.children.push_back(std::move(params));
            init.children.push_back(parseBlock());
            closeSpanToPrev(init);
            cls.children.push_back(std::move(init));
            return;
        }
        // nested type
        if (cur().isKeyword("class") || cur().isKeyword("interface") ||
            cur().isKeyword("enum") ||
            (cur().isIdent("record") && cur(1).isIdent())) {
            pos = indexOf(start);
            cls.children.push_back(parseTypeDecl());
            return;
        }
        if (cur().isPunct("<")) skipTypeArgs(); // generic method type params
        skipAnnotations();
        // constructor
        if (cur().isIdent() && cur().text == className && cur(1).isPunct("(")) {
            cls.children.push_back(parseExecutable(NodeKind::Constructor, start,
                                                   take().text));
            return;
        }
        // method or field: parse return type first
        std::optional<AstNode> type = tryType();
        if (!type) fail("expected member declaration");
        if (cur().isIdent() && cur(1).isPunct("(")) {
            std::string name = take().text;
            AstNode method =
                parseExecutable(NodeKind::Method, start, std::move(name));
            method.attrs["return_type"] = type->attrOr("text");
            cls.children.push_back(std::move(method));
            return;
        }
        // field declaration (possibly several declarators)
        parseVarDeclarators(cls.children, *type, start, /*requireSemi=*/true);
    }

    std::size_t indexOf(const Token& t) const {
        return static_cast<std::size_t>(&t - tokens.data());
    }

    AstNode parseExecutable(NodeKind kind, const Token& start, std::string name) {
        AstNode exec = node(kind, start);
        AstNode params = other("params", cur());
        expectPunct("(");
        int arity = 0;
        while (!cur().isPunct(")") && !atEnd()) {
            skipAnnotations();
            while (cur().isKeyword("final")) take();
            skipAnnotations();
            const Token& pstart = cur();
            std::optional<AstNode> ptype = tryType();
            if (!ptype) fail("expected parameter type");
            if (!cur().isIdent()) fail("expected parameter name");
            AstNode param = node(NodeKind::Parameter, pstart);
            param.attrs["name"] = take().text;
            while (cur().isPunct("[") && cur(1).isPunct("]")) { // int a[]
                take();
                take();
            }
            param.children.push_back(std::move(*ptype));
            closeSpanToPrev(param);
            params.children.push_back(std::move(param));
            ++arity;
            if (!eatPunct(",")) break;
        }
        expectPunct(")");
        closeSpanToPrev(params);
        exec.attrs["name"] = name;
        exec.attrs["arity"] = std::to_string(arity);
        exec.attrs["sig"] = name + "/" + std::to_string(arity);
        exec.children.push_back(std::move(params));
        if (cur().isKeyword("throws")) {
            while (!cur().isPunct("{") && !cur().isPunct(";") && !atEnd()) take();
        }
        if (cur().isPunct("{")) {
            exec.children.push_back(parseBlock());
        } else {
            expectPunct(";"); // abstract/native
        }
        closeSpanToPrev(exec);
        return exec;
    }

    // --- statements -------------------------------------------------------------

    AstNode parseBlock() {
        AstNode block = node(NodeKind::Block, cur());
        expectPunct("{");
        while (!cur().isPunct("}") && !atEnd()) {
            parseStatementInto(block.children);
        }
        expectPunct("}");
        closeSpanToPrev(block);
        return block;
    }

    // Wraps a single statement in a Block unless it already is one, so loop
    // and branch bodies are uniformly blocks.
    AstNode parseBlockOrStatement() {
        if (cur().isPunct("{")) return parseBlock();
        AstNode block = node(NodeKind::Block, cur());
        parseStatementInto(block.children);
        closeSpanToPrev(block);
        return block;
    }

    void parseStatementInto(std::vector<AstNode>& out) {
        std::size_t save = pos;
        try {
            parseStatementImpl(out);
        } catch (const ParseError&) {
            // Statement-level recovery: represent the unparsed region as an
            // Other node and resynchronize at the next ';' or brace.
            pos = save;
            AstNode bad = other("unparsed", cur());
            int depth = 0;
            while (!atEnd()) {
                if (cur().isPunct("{")) ++depth;
                if (cur().isPunct("}")) {
                    if (depth == 0) break;
                    --depth;
                }
                const Token& t = take();
                if (t.isPunct(";") && depth == 0) break;
            }
            if (pos == save) take(); // guarantee progress
            closeSpanToPrev(bad);
            out.push_back(std::move(bad));
        }
    }

    void parseStatementImpl(std::vector<AstNode>& out) {
        const Token& t = cur();
        if (t.isPunct("{")) {
            out.push_back(parseBlock());
        } else if (t.isPunct(";")) {
            AstNode empty = other("empty_stmt", t);
            take();
            out.push_back(std::move(empty));
        } else if (t.isKeyword("if")) {
            out.push_back(parseIf());
        } else if (t.isKeyword("for")) {
            out.push_back(parseFor());
        } else if (t.isKeyword("while")) {
            out.push_back(parseWhile());
        } else if (t.isKeyword("do")) {
            out.push_back(parseDoWhile());
        } else if (t.isKeyword("return")) {
            AstNode ret = node(NodeKind::Return, t);
            take();
            if (!cur().isPunct(";")) ret.children.push_back(parseExpression());
            expectPunct(";");
            closeSpanToPrev(ret);
            out.push_back(std::move(ret));
        } else if (t.isKeyword("switch")) {
            out.push_back(parseSwitch());
        } else if (t.isKeyword("try")) {
            out.push_back(parseTry());
        } else if (t.isKeyword("throw")) {
            AstNode thr = other("throw", t);
            take();
            thr.children.push_back(parseExpression());
            expectPunct(";");
            closeSpanToPrev(thr);
            out.push_back(std::move(thr));
        } else if (t.isKeyword("break") || t.isKeyword("continue")) {
            AstNode jump = other(t.text, t);
            take();
            if (cur().isIdent()) take(); // label
            expectPunct(";");
            closeSpanToPrev(jump);
            out.push_back(std::move(jump));
        } else if (t.isKeyword("synchronized")) {
            AstNode sync = other("synchronized", t);
            take();
            expectPunct("(");
            sync.children.push_back(parseExpression());
            expectPunct(")");
            sync.children.push_back(parseBlock());
            closeSpanToPrev(sync);
            out.push_back(std::move(sync));
        } else if (t.isKeyword("assert")) {
            AstNode node = other("assert", t);
            take();
            node.children.push_back(parseExpression());
            if (eatPunct(":")) node.children.push_back(parseExpression());
            expectPunct(";");
            closeSpanToPrev(node);
            out.push_back(std::move(node));
        } else if (t.isIdent("yield")) {
            AstNode y = other("yield", t);
            take();
            y.children.push_back(parseExpression());
            expectPunct(";");
            closeSpanToPrev(y);
            out.push_back(std::move(y));
        } else if (t.isKeyword("class") ||
                   (t.isIdent("record") && cur(1).isIdent())) {
            out.push_back(parseTypeDecl()); // local class
        } else if (t.isIdent() && cur(1).isPunct(":")) {
            AstNode labeled = other("labeled", t);
            labeled.attrs["label_name"] = take().text;
            take(); // ':'
            parseStatementInto(labeled.children);
            closeSpanToPrev(labeled);
            out.push_back(std::move(labeled));
        } else {
            // local variable declaration or expression statement
            if (tryLocalVarDecl(out)) return;
            AstNode expr = parseExpression();
            expectPunct(";");
            out.push_back(std::move(expr));
        }
    }

    bool tryLocalVarDecl(std::vector<AstNode>& out) {
        std::size_t save = pos;
        const Token& start = cur();
        skipAnnotations();
        while (cur().isKeyword("final")) take();
        std::optional<AstNode> type;
        if (cur().isIdent("var") && cur(1).isIdent()) {
            AstNode t = node(NodeKind::TypeRef, cur());
            t.attrs["name"] = "var";
            t.attrs["text"] = "var";
            take();
            type = std::move(t);
        } else {
            type = tryType();
        }
        if (!type || !cur().isIdent()) {
            pos = save;
            return false;
        }
        // declarator must be followed by '=', ',', ';', or '[' (array suffix)
        const Token& next = cur(1);
        if (!(next.isPunct("=") || next.isPunct(",") || next.isPunct(";") ||
              (next.isPunct("[") && cur(2).isPunct("]")))) {
            pos = save;
            return false;
        }
        std::size_t produced = out.size();
        try {
            parseVarDeclarators(out, *type, start, /*requireSemi=*/true);
        } catch (const ParseError&) {
            out.resize(produced);
            pos = save;
            return false;
        }
        return true;
    }

    void parseVarDeclarators(std::vector<AstNode>& out, const AstNode& type,
                             const Token& start, bool requireSemi) {
        while (true) {
            if (!cur().isIdent()) fail("expected variable name");
            AstNode def = node(NodeKind::VarDef, start);
            def.attrs["name"] = take().text;
            while (cur().isPunct("[") && cur(1).isPunct("]")) {
                take();
                take();
            }
            AstNode typeCopy = cloneWithFreshIds(type);
            def.children.push_back(std::move(typeCopy));
            if (eatPunct("=")) {
                if (cur().isPunct("{")) {
                    def.children.push_back(parseArrayInitializer());
                } else {
                    def.children.push_back(parseExpression());
                }
            }
            closeSpanToPrev(def);
            out.push_back(std::move(def));
            if (!eatPunct(",")) break;
        }
        if (requireSemi) expectPunct(";");
    }

    AstNode cloneWithFreshIds(const AstNode& src) {
        AstNode copy = src;
        std::function<void(AstNode&)> renumber = [&](AstNode& n) {
            n.id = nextId++;
            for (AstNode& c : n.children) renumber(c);
        };
        renumber(copy);
        return copy;
    }

    AstNode parseArrayInitializer() {
        AstNode init = other("array_init", cur());
        expectPunct("{");
        while (!cur().isPunct("}") && !atEnd()) {
            if (cur().isPunct("{")) {
                init.children.push_back(parseArrayInitializer());
            } else {
                init.children.push_back(parseExpression());
            }
            if (!eatPunct(",")) break;
        }
        expectPunct("}");
        closeSpanToPrev(init);
        return init;
    }

    AstNode parseIf() {
        AstNode ifNode = node(NodeKind::If, cur());
        take(); // if
        expectPunct("(");
        ifNode.children.push_back(parseExpression());
        expectPunct(")");
        ifNode.children.push_back(parseBlockOrStatement());
        if (eatKeyword("else")) {
            ifNode.children.push_back(parseBlockOrStatement());
        }
        closeSpanToPrev(ifNode);
        return ifNode;
    }

    AstNode parseWhile() {
        AstNode loop = node(NodeKind::WhileLoop, cur());
        take();
        expectPunct("(");
        loop.children.push_back(parseExpression());
        expectPunct(")");
        loop.children.push_back(parseBlockOrStatement());
        closeSpanToPrev(loop);
        return loop;
    }

    AstNode parseDoWhile() {
        AstNode loop = node(NodeKind::DoWhileLoop, cur());
        take(); // do
        AstNode body = parseBlockOrStatement();
        if (!eatKeyword("while")) fail("expected 'while' after do body");
        expectPunct("(");
        AstNode cond = parseExpression();
        expectPunct(")");
        expectPunct(";");
        loop.children.push_back(std::move(cond)); // condition first, as for while
        loop.children.push_back(std::move(body));
        closeSpanToPrev(loop);
        return loop;
    }

    AstNode parseFor() {
        const Token& start = cur();
        take(); // for
        expectPunct("(");
        // for-each: [final] Type name ':' expr
        std::size_t save = pos;
        {
            while (cur().isKeyword("final")) take();
            skipAnnotations();
            std::optional<AstNode> type;
            if (cur().isIdent("var") && cur(1).isIdent()) {
                AstNode t = node(NodeKind::TypeRef, cur());
                t.attrs["name"] = "var";
                t.attrs["text"] = "var";
                take();
                type = std::move(t);
            } else {
                type = tryType();
            }
            if (type && cur().isIdent() && cur(1).isPunct(":")) {
                AstNode loop = node(NodeKind::ForEachLoop, start);
                AstNode def = node(NodeKind::VarDef, cur());
                def.attrs["name"] = take().text;
                def.children.push_back(std::move(*type));
                closeSpanToPrev(def);
                take(); // ':'
                AstNode iterable = parseExpression();
                expectPunct(")");
                loop.children.push_back(std::move(def));
                loop.children.push_back(std::move(iterable));
                loop.children.push_back(parseBlockOrStatement());
                closeSpanToPrev(loop);
                return loop;
            }
            pos = save;
        }
        AstNode loop = node(NodeKind::ForLoop, start);
        AstNode init = other("for_init", cur());
        if (!cur().isPunct(";")) {
            if (!tryLocalVarDecl(init.children)) {
                init.children.push_back(parseExpression());
                while (eatPunct(",")) init.children.push_back(parseExpression());
                expectPunct(";");
            }
        } else {
            take();
        }
        closeSpanToPrev(init);
        AstNode cond = cur().isPunct(";") ? other("empty", cur()) : parseExpression();
        expectPunct(";");
        AstNode update = other("for_update", cur());
        if (!cur().isPunct(")")) {
            update.children.push_back(parseExpression());
            while (eatPunct(",")) update.children.push_back(parseExpression());
        }
        closeSpanToPrev(update);
        expectPunct(")");
        loop.children.push_back(std::move(init));
        loop.children.push_back(std::move(cond));
        loop.children.push_back(std::move(update));
        loop.children.push_back(parseBlockOrStatement());
        closeSpanToPrev(loop);
        return loop;
    }

    AstNode parseSwitch() {
        AstNode sw = other("switch", cur());
        take();
        expectPunct("(");
        sw.children.push_back(parseExpression());
        expectPunct(")");
        expectPunct("{");
        while (!cur().isPunct("}") && !atEnd()) {
            if (cur().isKeyword("case") || cur().isKeyword("default")) {
                AstNode c = other("case", cur());
                take();
                while (!cur().isPunct(":") && !cur().isPunct("->") && !atEnd()) {
                    take();
                }
                if (atEnd()) fail("unterminated switch case");
                take(); // ':' or '->'
                while (!cur().isKeyword("case") && !cur().isKeyword("default") &&
                       !cur().isPunct("}") && !atEnd()) {
                    parseStatementInto(c.children);
                }
                closeSpanToPrev(c);
                sw.children.push_back(std::move(c));
            } else {
                take();
            }
        }
        expectPunct("}");
        closeSpanToPrev(sw);
        return sw;
    }

    AstNode parseTry() {
        AstNode tryNode = other("try", cur());
        take();
        if (cur().isPunct("(")) {
            AstNode resources = other("resources", cur());
            take();
            while (!cur().isPunct(")") && !atEnd()) {
                if (!tryLocalVarDecl2(resources.children)) {
                    resources.children.push_back(parseExpression());
                }
                eatPunct(";");
            }
            expectPunct(")");
            closeSpanToPrev(resources);
            tryNode.children.push_back(std::move(resources));
        }
        tryNode.children.push_back(parseBlock());
        while (cur().isKeyword("catch")) {
            AstNode cat = other("catch", cur());
            take();
            expectPunct("(");
            while (cur().isKeyword("final")) take();
            const Token& pstart = cur();
            std::optional<AstNode> type = tryType();
            if (!type) fail("expected catch parameter type");
            while (eatPunct("|")) { // multi-catch
                std::optional<AstNode> moreType = tryType();
                if (!moreType) fail("expected catch parameter type");
            }
            if (!cur().isIdent()) fail("expected catch parameter name");
            AstNode param = node(NodeKind::Parameter, pstart);
            param.attrs["name"] = take().text;
            param.children.push_back(std::move(*type));
            closeSpanToPrev(param);
            expectPunct(")");
            cat.children.push_back(std::move(param));
            cat.children.push_back(parseBlock());
            closeSpanToPrev(cat);
            tryNode.children.push_back(std::move(cat));
        }
        if (eatKeyword("finally")) {
            tryNode.children.push_back(parseBlock());
        }
        closeSpanToPrev(tryNode);
        return tryNode;
    }

    // Local var declaration without the trailing ';' (try-with-resources).
    bool tryLocalVarDecl2(std::vector<AstNode>& out) {
        std::size_t save = pos;
        const Token& start = cur();
        while (cur().isKeyword("final")) take();
        std::optional<AstNode> type;
        if (cur().isIdent("var") && cur(1).isIdent()) {
            AstNode t = node(NodeKind::TypeRef, cur());
            t.attrs["name"] = "var";
            t.attrs["text"] = "var";
            take();
            type = std::move(t);
        } else {
            type = tryType();
        }
        if (!type || !cur().isIdent() || !cur(1).isPunct("=")) {
            pos = save;
            return false;
        }
        AstNode def = node(NodeKind::VarDef, start);
        def.attrs["name"] = take().text;
        def.children.push_back(std::move(*type));
        take(); // '='
        def.children.push_back(parseExpression());
        closeSpanToPrev(def);
        out.push_back(std::move(def));
        return true;
    }

    // --- expressions --------------------------------------------------------------

    AstNode parseExpression() { return parseAssignment(); }

    AstNode parseAssignment() {
        AstNode lhs = parseTernary();
        static const char* const assignOps[] = {"=",  "+=", "-=",  "*=",  "/=", "%=",
                                                "&=", "|=", "^=", "<<=", ">>=", ">>>="};
        for (const char* op : assignOps) {
            if (cur().isPunct(op)) {
                take();
                AstNode assign = node(NodeKind::Assignment, cur());
                assign.span = lhs.span;
                assign.attrs["op"] = op;
                markWrite(lhs);
                AstNode rhs = parseAssignment(); // right-assoc
                growSpan(assign, rhs);
                assign.children.push_back(std::move(lhs));
                assign.children.push_back(std::move(rhs));
                return assign;
            }
        }
        return lhs;
    }

    // An identifier on the left of an assignment (or under ++/--) is a write.
    void markWrite(AstNode& lhs) {
        if (lhs.kind == NodeKind::VarRead) lhs.kind = NodeKind::VarWrite;
    }

    AstNode parseTernary() {
        AstNode cond = parseBinary(0);
        if (cur().isPunct("?")) {
            AstNode ternary = other("ternary", cur());
            ternary.span = cond.span;
            take();
            AstNode a = parseExpression();
            expectPunct(":");
            AstNode b = parseExpression();
            growSpan(ternary, b);
            ternary.children.push_back(std::move(cond));
            ternary.children.push_back(std::move(a));
            ternary.children.push_back(std::move(b));
            return ternary;
        }
        return cond;
    }

    struct BinLevel {
        std::vector<const char*> ops;
    };

    const std::vector<BinLevel>& binLevels() const {
        static const std::vector<BinLevel> levels = {
            {{"||"}},
            {{"&&"}},
            {{"|"}},
            {{"^"}},
            {{"&"}},
            {{"==", "!="}},
            {{"<", ">", "<=", ">=", "instanceof"}},
            {{"<<", ">>", ">>>"}},
            {{"+", "-"}},
            {{"*", "/", "%"}},
        };
        return levels;
    }

    AstNode parseBinary(std::size_t level) {
        if (level >= binLevels().size()) return parseUnary();
        AstNode lhs = parseBinary(level + 1);
        while (true) {
            const char* matched = nullptr;
            for (const char* op : binLevels()[level].ops) {
                if (cur().isPunct(op) || (cur().isKeyword(op))) {
                    matched = op;
                    break;
                }
            }
            if (!matched) return lhs;
            take();
            AstNode bin = node(NodeKind::BinOp, cur());
            bin.span = lhs.span;
            bin.attrs["op"] = matched;
            AstNode rhs;
            if (std::string(matched) == "instanceof") {
                std::optional<AstNode> type = tryType();
                if (!type) fail("expected type after instanceof");
                if (cur().isIdent()) take(); // pattern variable
                rhs = std::move(*type);
            } else {
                rhs = parseBinary(level + 1);
            }
            growSpan(bin, rhs);
            bin.children.push_back(std::move(lhs));
            bin.children.push_back(std::move(rhs));
            lhs = std::move(bin);
        }
    }

    AstNode parseUnary() {
        const Token& t = cur();
        if (t.isPunct("+") || t.isPunct("-") || t.isPunct("!") || t.isPunct("~")) {
            AstNode op = node(NodeKind::UnaryOp, t);
            op.attrs["op"] = take().text;
            op.attrs["pos"] = "prefix";
            AstNode operand = parseUnary();
            growSpan(op, operand);
            op.children.push_back(std::move(operand));
            return op;
        }
        if (t.isPunct("++") || t.isPunct("--")) {
            AstNode op = node(NodeKind::UnaryOp, t);
            op.attrs["op"] = take().text;
            op.attrs["pos"] = "prefix";
            AstNode operand = parseUnary();
            markWrite(operand);
            growSpan(op, operand);
            op.children.push_back(std::move(operand));
            return op;
        }
        // cast: '(' Type ')' followed by a unary-start token
        if (t.isPunct("(")) {
            std::size_t save = pos;
            take();
            std::optional<AstNode> type = tryType();
            if (type && cur().isPunct(")")) {
                bool primitive = false;
                for (const char* p : kPrimitiveTypes) {
                    if (type->attrOr("name") == p) primitive = true;
                }
                const Token& after = cur(1);
                bool castFollows =
                    after.isIdent() || after.type == TokenType::IntLiteral ||
                    after.type == TokenType::FloatLiteral ||
                    after.type == TokenType::CharLiteral ||
                    after.type == TokenType::StringLiteral || after.isPunct("(") ||
                    after.isPunct("!") || after.isPunct("~") ||
                    after.isKeyword("new") || after.isKeyword("this") ||
                    (primitive && (after.isPunct("+") || after.isPunct("-")));
                if (castFollows && (primitive || type->attrOr("text").find('<') !=
                                                     std::string::npos ||
                                    looksLikeTypeName(type->attrOr("name")))) {
                    take(); // ')'
                    AstNode cast = other("cast", t);
                    AstNode inner = parseUnary();
                    growSpan(cast, inner);
                    cast.children.push_back(std::move(*type));
                    cast.children.push_back(std::move(inner));
                    return cast;
                }
            }
            pos = save;
        }
        return parsePostfix();
    }

    static bool looksLikeTypeName(const std::string& name) {
        return !name.empty() && std::isupper(static_cast<unsigned char>(name[0]));
    }

    AstNode parsePostfix() {
        AstNode expr = parsePrimary();
        while (true) {
            if (cur().isPunct(".")) {
                if (cur(1).isPunct("<")) { // explicit type args on call
                    take();
                    skipTypeArgs();
                    if (!cur().isIdent()) fail("expected method name");
                    expr = finishCall(std::move(expr), take().text);
                    continue;
                }
                if (cur(1).isIdent() || cur(1).isKeyword("this") ||
                    cur(1).isKeyword("class") || cur(1).isKeyword("new") ||
                    cur(1).isKeyword("super")) {
                    take();
                    if (cur().isKeyword("class")) {
                        AstNode lit = node(NodeKind::Literal, cur());
                        lit.attrs["text"] = "class";
                        lit.attrs["type"] = "class";
                        take();
                        lit.span = expr.span;
                        closeSpanToPrev(lit);
                        expr = std::move(lit);
                        continue;
                    }
                    if (cur().isKeyword("new")) { // qualified new, rare
                        take();
                        expr = parseNew(expr.span);
                        continue;
                    }
                    if (cur().isKeyword("this") || cur().isKeyword("super")) {
                        AstNode fa = node(NodeKind::FieldAccess, cur());
                        fa.span = expr.span;
                        fa.attrs["name"] = take().text;
                        fa.children.push_back(std::move(expr));
                        closeSpanToPrev(fa);
                        expr = std::move(fa);
                        continue;
                    }
                    std::string name = take().text;
                    if (cur().isPunct("(")) {
                        expr = finishCall(std::move(expr), std::move(name));
                    } else {
                        AstNode fa = node(NodeKind::FieldAccess, cur());
                        fa.span = expr.span;
                        fa.attrs["name"] = std::move(name);
                        fa.children.push_back(std::move(expr));
                        closeSpanToPrev(fa);
                        expr = std::move(fa);
                    }
                    continue;
                }
                fail("unexpected token after '.'");
            }
            if (cur().isPunct("[")) {
                take();
                AstNode access = node(NodeKind::ArrayAccess, cur());
                access.span = expr.span;
                AstNode index = parseExpression();
                expectPunct("]");
                access.children.push_back(std::move(expr));
                access.children.push_back(std::move(index));
                closeSpanToPrev(access);
                expr = std::move(access);
                continue;
            }
            if (cur().isPunct("++") || cur().isPunct("--")) {
                AstNode op = node(NodeKind::UnaryOp, cur());
                op.span = expr.span;
                op.attrs["op"] = take().text;
                op.attrs["pos"] = "postfix";
                markWrite(expr);
                op.children.push_back(std::move(expr));
                closeSpanToPrev(op);
                expr = std::move(op);
                continue;
            }
            if (cur().isPunct("::")) { // method reference
                take();
                AstNode ref = other("method_ref", cur());
                ref.span = expr.span;
                if (cur().isIdent() || cur().isKeyword("new")) {
                    ref.attrs["name"] = take().text;
                } else {
                    fail("expected name after '::'");
                }
                ref.children.push_back(std::move(expr));
                closeSpanToPrev(ref);
                expr = std::move(ref);
                continue;
            }
            return expr;
        }
    }

    AstNode finishCall(std::optional<AstNode> receiver, std::string name) {
        AstNode call = node(NodeKind::MethodCall, cur());
        if (receiver) call.span = receiver->span;
        call.attrs["name"] = name;
        call.attrs["form"] = "call";
        if (receiver) call.children.push_back(std::move(*receiver));
        expectPunct("(");
        int arity = 0;
        while (!cur().isPunct(")") && !atEnd()) {
            call.children.push_back(parseExpression());
            ++arity;
            if (!eatPunct(",")) break;
        }
        expectPunct(")");
        call.attrs["arity"] = std::to_string(arity);
        call.attrs["sig"] = name + "/" + std::to_string(arity);
        closeSpanToPrev(call);
        return call;
    }

    AstNode parseNew(std::optional<SourceSpan> startSpan = std::nullopt) {
        const Token& start = cur();
        std::optional<AstNode> type = tryType();
        if (!type) fail("expected type after new");
        // array creation
        if (cur().isPunct("[")) {
            AstNode arr = other("new_array", start);
            if (startSpan) arr.span = *startSpan;
            arr.children.push_back(std::move(*type));
            while (eatPunct("[")) {
                if (!cur().isPunct("]")) arr.children.push_back(parseExpression());
                expectPunct("]");
            }
            if (cur().isPunct("{")) arr.children.push_back(parseArrayInitializer());
            closeSpanToPrev(arr);
            return arr;
        }
        if (cur().isPunct("{")) { // new int[] {...} already consumed dims via type
            AstNode arr = other("new_array", start);
            arr.children.push_back(std::move(*type));
            arr.children.push_back(parseArrayInitializer());
            closeSpanToPrev(arr);
            return arr;
        }
        AstNode call = node(NodeKind::MethodCall, start);
        if (startSpan) call.span = *startSpan;
        call.attrs["name"] = type->attrOr("name");
        call.attrs["form"] = "new";
        expectPunct("(");
        int arity = 0;
        while (!cur().isPunct(")") && !atEnd()) {
            call.children.push_back(parseExpression());
            ++arity;
            if (!eatPunct(",")) break;
        }
        expectPunct(")");
        call.attrs["arity"] = std::to_string(arity);
        call.attrs["sig"] = call.attrs["name"] + "/" + std::to_string(arity);
        if (cur().isPunct("{")) { // anonymous class body
            AstNode anon = other("anon_class", cur());
            take();
            parseMembers(anon, call.attrs["name"]);
            closeSpanToPrev(anon);
            call.children.push_back(std::move(anon));
        }
        closeSpanToPrev(call);
        return call;
    }

    bool isLambdaAhead() {
        if (cur().isIdent() && cur(1).isPunct("->")) return true;
        if (!cur().isPunct("(")) return false;
        std::size_t i = pos;
        int depth = 0;
        while (i < tokens.size()) {
            const Token& t = tokens[i];
            if (t.isPunct("(")) ++depth;
            else if (t.isPunct(")")) {
                --depth;
                if (depth == 0) {
                    return i + 1 < tokens.size() && tokens[i + 1].isPunct("->");
                }
            } else if (t.type == TokenType::End) {
                return false;
            }
            ++i;
        }
        return false;
    }

    AstNode parseLambda() {
        AstNode lambda = other("lambda", cur());
        AstNode params = other("params", cur());
        if (cur().isIdent()) {
            AstNode param = node(NodeKind::Parameter, cur());
            param.attrs["name"] = take().text;
            params.children.push_back(std::move(param));
        } else {
            expectPunct("(");
            while (!cur().isPunct(")") && !atEnd()) {
                while (cur().isKeyword("final")) take();
                const Token& pstart = cur();
                std::optional<AstNode> type;
                if ((cur().isIdent() &&
                     (cur(1).isPunct(",") || cur(1).isPunct(")")))) {
                    type = std::nullopt; // untyped lambda parameter
                } else {
                    type = tryType();
                }
                if (!cur().isIdent()) fail("expected lambda parameter");
                AstNode param = node(NodeKind::Parameter, pstart);
                param.attrs["name"] = take().text;
                if (type) param.children.push_back(std::move(*type));
                closeSpanToPrev(param);
                params.children.push_back(std::move(param));
                if (!eatPunct(",")) break;
            }
            expectPunct(")");
        }
        closeSpanToPrev(params);
        expectPunct("->");
        lambda.children.push_back(std::move(params));
        if (cur().isPunct("{")) {
            lambda.children.push_back(parseBlock());
        } else {
            lambda.children.push_back(parseExpression());
        }
        closeSpanToPrev(lambda);
        return lambda;
    }

    AstNode parsePrimary() {
        const Token& t = cur();
        if (isLambdaAhead()) return parseLambda();
        if (t.type == TokenType::IntLiteral || t.type == TokenType::FloatLiteral ||
            t.type == TokenType::CharLiteral || t.type == TokenType::StringLiteral) {
            AstNode lit = node(NodeKind::Literal, t);
            lit.attrs["text"] = t.text;
            lit.attrs["type"] = t.type == TokenType::IntLiteral    ? "int"
                                : t.type == TokenType::FloatLiteral ? "float"
                                : t.type == TokenType::CharLiteral  ? "char"
                                                                    : "string";
            take();
            return lit;
        }
        if (t.isKeyword("true") || t.isKeyword("false") || t.isIdent("true") ||
            t.isIdent("false")) {
            AstNode lit = node(NodeKind::Literal, t);
            lit.attrs["text"] = take().text;
            lit.attrs["type"] = "boolean";
            return lit;
        }
        if (t.isKeyword("null") || t.isIdent("null")) {
            AstNode lit = node(NodeKind::Literal, t);
            lit.attrs["text"] = take().text;
            lit.attrs["type"] = "null";
            return lit;
        }
        if (t.isKeyword("this")) {
            AstNode self = other("this", t);
            take();
            if (cur().isPunct("(")) { // this(...) constructor delegation
                AstNode call = node(NodeKind::MethodCall, t);
                call.attrs["name"] = "this";
                call.attrs["form"] = "call";
                expectPunct("(");
                int arity = 0;
                while (!cur().isPunct(")") && !atEnd()) {
                    call.children.push_back(parseExpression());
                    ++arity;
                    if (!eatPunct(",")) break;
                }
                expectPunct(")");
                call.attrs["arity"] = std::to_string(arity);
                call.attrs["sig"] = "this/" + std::to_string(arity);
                closeSpanToPrev(call);
                return call;
            }
            return self;
        }
        if (t.isKeyword("super")) {
            AstNode sup = other("super", t);
            take();
            if (cur().isPunct("(")) {
                AstNode call = node(NodeKind::MethodCall, t);
                call.attrs["name"] = "super";
                call.attrs["form"] = "call";
                expectPunct("(");
                int arity = 0;
                while (!cur().isPunct(")") && !atEnd()) {
                    call.children.push_back(parseExpression());
                    ++arity;
                    if (!eatPunct(",")) break;
                }
                expectPunct(")");
                call.attrs["arity"] = std::to_string(arity);
                call.attrs["sig"] = "super/" + std::to_string(arity);
                closeSpanToPrev(call);
                return call;
            }
            return sup;
        }
        if (t.isKeyword("new")) {
            take();
            return parseNew();
        }
        if (t.isKeyword("switch")) { // switch expression
            return parseSwitch();
        }
        if (t.isPunct("(")) {
            take();
            AstNode inner = parseExpression();
            expectPunct(")");
            return inner;
        }
        if (isPrimitiveType(t)) { // e.g. int.class, long[].class
            std::optional<AstNode> type = tryType();
            if (type) return std::move(*type);
        }
        if (t.isIdent()) {
            std::string name = take().text;
            if (cur().isPunct("(")) {
                return finishCall(std::nullopt, std::move(name));
            }
            AstNode read = node(NodeKind::VarRead, t);
            read.attrs["name"] = std::move(name);
            return read;
        }
        fail("unexpected token '" + t.text + "'");
    }
};

std::string readFileOrThrow(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot read file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

} // namespace

void CompilationUnit::refreshEntryPoints() {
    entryPoints.clear();
    forEachNode(root, [&](const AstNode& node) {
        if (node.isExecutable()) entryPoints.push_back(&node);
    });
    std::sort(entryPoints.begin(), entryPoints.end(),
              [](const AstNode* a, const AstNode* b) { return a->span < b->span; });
}

CompilationUnit parseSource(const std::string& source, const std::string& path) {
    Parser parser;
    parser.path = path;
    parser.sharedPath = std::make_shared<const std::string>(path);
    parser.tokens = lex(source, path);

    CompilationUnit unit;
    unit.path = path;
    unit.root = parser.parseUnit();

    NodeId next = parser.nextId;
    normalizeCompoundAssignments(unit.root, next);
    resolveReferences(unit.root);
    unit.refreshEntryPoints();
    return unit;
}

CompilationUnit parseFile(const std::string& path) {
    return parseSource(readFileOrThrow(path), path);
}

ScanResult scanTree(const std::string& dir, unsigned jobs) {
    namespace fs = std::filesystem;
    if (!fs::exists(dir) || !fs::is_directory(dir)) {
        throw IoError("not a directory: " + dir);
    }
    std::vector<std::string> paths;
    for (const auto& entry : fs::recursive_directory_iterator(dir)) {
        if (entry.is_regular_file() && entry.path().extension() == ".java") {
            paths.push_back(entry.path().string());
        }
    }
    std::sort(paths.begin(), paths.end());

    ScanResult result;
    std::vector<std::optional<CompilationUnit>> slots(paths.size());
    std::vector<std::optional<ParseError>> errors(paths.size());

    auto worker = [&](std::size_t begin, std::size_t stride) {
        for (std::size_t i = begin; i < paths.size(); i += stride) {
            try {
                slots[i] = parseFile(paths[i]);
            } catch (const ParseError& e) {
                errors[i] = e;
            } catch (const IoError& e) {
                errors[i] = ParseError(paths[i], 0, 0, e.what());
            }
        }
    };

    unsigned n = std::max(1u, jobs);
    if (n == 1 || paths.size() < 2) {
        worker(0, 1);
    } else {
        std::vector<std::thread> threads;
        for (unsigned t = 0; t < n; ++t) threads.emplace_back(worker, t, n);
        for (auto& th : threads) th.join();
    }
    for (std::size_t i = 0; i < paths.size(); ++i) {
        if (slots[i]) {
            result.units.push_back(std::move(*slots[i]));
            result.units.back().refreshEntryPoints();
        } else if (errors[i]) {
            result.errors.push_back(*errors[i]);
        }
    }
    return result;
}

} // namespace algorec::java
