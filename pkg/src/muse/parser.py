"""Recursive-descent parser producing a span-exact AST.

Accepts the union of 0.4.x-0.8.x Solidity syntax needed by the mutation
operators: both ``call.value(x)()`` chains and ``call{value: x}()`` option
blocks, old- and new-style constructors, unnamed 0.4 fallbacks, ``throw``,
``unchecked`` blocks, and so on. Everything is parsed from immutable text;
two parses of identical content produce structurally identical trees.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Any, Iterator, Optional

from .errors import ParseError, UnsupportedConstruct
from .lexer import Token, tokenize
from .source import SourceFile, Span

_ELEMENTARY_RE = re.compile(
    r"^(address|bool|string|var|byte|bytes([1-9]|[12][0-9]|3[0-2])?"
    r"|u?int(8|16|24|32|40|48|56|64|72|80|88|96|104|112|120|128|136|144|152"
    r"|160|168|176|184|192|200|208|216|224|232|240|248|256)?"
    r"|u?fixed[0-9x]*)$"
)

_VISIBILITY = {"public", "external", "internal", "private"}
_MUTABILITY = {"pure", "view", "payable", "constant"}
_STORAGE = {"memory", "storage", "calldata"}
_SUBDENOMINATIONS = {
    "wei", "gwei", "szabo", "finney", "ether",
    "seconds", "minutes", "hours", "days", "weeks", "years",
}
_ASSIGN_OPS = {"=", "+=", "-=", "*=", "/=", "%=", "|=", "^=", "&=", "<<=", ">>="}

# Binary precedence, loosest first; each entry is (operators, right_assoc).
_BINARY_LEVELS = [
    ({"||"}, False),
    ({"&&"}, False),
    ({"==", "!="}, False),
    ({"<", ">", "<=", ">="}, False),
    ({"|"}, False),
    ({"^"}, False),
    ({"&"}, False),
    ({"<<", ">>"}, False),
    ({"+", "-"}, False),
    ({"*", "/", "%"}, False),
    ({"**"}, True),
]


@dataclass
class AstNode:
    """One AST node: a kind tag, an exact source span, ordered children,
    and kind-specific attributes (which may reference child nodes)."""

    kind: str
    span: Span
    children: list["AstNode"] = field(default_factory=list)
    attrs: dict[str, Any] = field(default_factory=dict)

    def get(self, key: str, default=None):
        return self.attrs.get(key, default)

    def walk(self) -> Iterator["AstNode"]:
        yield self
        for child in self.children:
            yield from child.walk()

    def walk_with_ancestors(self, _stack=()) -> Iterator[tuple["AstNode", tuple["AstNode", ...]]]:
        yield self, _stack
        stack = _stack + (self,)
        for child in self.children:
            yield from child.walk_with_ancestors(stack)

    def find_all(self, kind: str) -> list["AstNode"]:
        return [n for n in self.walk() if n.kind == kind]

    def __repr__(self):
        return f"AstNode({self.kind}, [{self.span.start}:{self.span.end}])"


def parse(source: SourceFile) -> AstNode:
    """Parse a source file into a SourceUnit tree."""
    return _Parser(source).parse_source_unit()


class _Parser:
    def __init__(self, source: SourceFile):
        self.src = source
        self.toks = tokenize(source.content)
        self.pos = 0

    # -- token plumbing -----------------------------------------------------

    def peek(self, ahead: int = 0) -> Token:
        i = min(self.pos + ahead, len(self.toks) - 1)
        return self.toks[i]

    def next(self) -> Token:
        t = self.toks[self.pos]
        if t.kind != "eof":
            self.pos += 1
        return t

    def at(self, text: str) -> bool:
        return self.peek().text == text and self.peek().kind in ("punct", "ident")

    def at_ident(self, text: str) -> bool:
        t = self.peek()
        return t.kind == "ident" and t.text == text

    def accept(self, text: str) -> Optional[Token]:
        if self.at(text):
            return self.next()
        return None

    def expect(self, text: str) -> Token:
        if not self.at(text):
            t = self.peek()
            raise self.error(f"expected {text!r}, found {t.text!r}" if t.text else f"expected {text!r}, found end of file")
        return self.next()

    def expect_ident(self) -> Token:
        t = self.peek()
        if t.kind != "ident":
            raise self.error(f"expected identifier, found {t.text!r}")
        return self.next()

    def error(self, msg: str) -> ParseError:
        t = self.peek()
        return ParseError(msg, t.span.start_line, t.span.start_col)

    def unsupported(self, construct: str) -> UnsupportedConstruct:
        t = self.peek()
        return UnsupportedConstruct(construct, t.span.start_line, t.span.start_col)

    def span_from(self, start_tok: Token, end_tok: Token | None = None) -> Span:
        end = (end_tok or self.toks[self.pos - 1]).span.end
        return self.src.span(start_tok.span.start, end)

    def node(self, kind: str, start_tok: Token, children=None, **attrs) -> AstNode:
        return AstNode(kind, self.span_from(start_tok), children or [], attrs)

    # -- source unit --------------------------------------------------------

    def parse_source_unit(self) -> AstNode:
        start = self.peek()
        items: list[AstNode] = []
        while self.peek().kind != "eof":
            items.append(self.parse_top_level())
        span = self.src.span(0, len(self.src.data))
        return AstNode("SourceUnit", span, items, {"path": self.src.path})

    def parse_top_level(self) -> AstNode:
        t = self.peek()
        if self.at_ident("pragma"):
            return self.parse_pragma()
        if self.at_ident("import"):
            return self.parse_import()
        if t.text in ("contract", "interface", "library") or (
            self.at_ident("abstract") and self.peek(1).text == "contract"
        ):
            return self.parse_contract()
        if self.at_ident("struct"):
            return self.parse_struct()
        if self.at_ident("enum"):
            return self.parse_enum()
        if self.at_ident("function"):
            return self.parse_function("")
        raise self.unsupported(f"top-level {t.text!r}")

    def parse_pragma(self) -> AstNode:
        start = self.next()
        name = self.expect_ident().text
        value_toks = []
        while not self.at(";") and self.peek().kind != "eof":
            value_toks.append(self.next().text)
        self.expect(";")
        return self.node("PragmaDirective", start, name=name, value=" ".join(value_toks))

    def parse_import(self) -> AstNode:
        start = self.next()
        path = None
        while not self.at(";") and self.peek().kind != "eof":
            t = self.next()
            if t.kind == "string" and path is None:
                path = t.text[1:-1]
        self.expect(";")
        return self.node("ImportDirective", start, path=path)

    # -- contract -----------------------------------------------------------

    def parse_contract(self) -> AstNode:
        start = self.peek()
        is_abstract = bool(self.accept("abstract"))
        kind_tok = self.next()
        name = self.expect_ident().text
        children: list[AstNode] = []
        if self.accept("is"):
            while True:
                base_start = self.peek()
                base_name = [self.expect_ident().text]
                while self.accept("."):
                    base_name.append(self.expect_ident().text)
                args = []
                if self.at("("):
                    args = self.parse_call_arguments()
                children.append(
                    self.node("InheritanceSpecifier", base_start, args, name=".".join(base_name))
                )
                if not self.accept(","):
                    break
        self.expect("{")
        while not self.at("}"):
            if self.peek().kind == "eof":
                raise self.error("unterminated contract body")
            children.append(self.parse_contract_part(name))
        self.expect("}")
        return self.node(
            "ContractDefinition", start, children,
            name=name, contractKind=kind_tok.text, abstract=is_abstract,
        )

    def parse_contract_part(self, contract_name: str) -> AstNode:
        t = self.peek()
        if self.at_ident("function") or self.at_ident("constructor") or (
            t.text in ("fallback", "receive") and self.peek(1).text == "("
        ):
            return self.parse_function(contract_name)
        if self.at_ident("modifier"):
            return self.parse_modifier()
        if self.at_ident("event"):
            return self.parse_event()
        if self.at_ident("error") and self.peek(1).kind == "ident":
            return self.parse_error_definition()
        if self.at_ident("struct"):
            return self.parse_struct()
        if self.at_ident("enum"):
            return self.parse_enum()
        if self.at_ident("using"):
            return self.parse_using()
        if self.at_ident("type"):
            raise self.unsupported("user-defined value type")
        return self.parse_state_variable()

    def parse_struct(self) -> AstNode:
        start = self.next()
        name = self.expect_ident().text
        self.expect("{")
        members = []
        while not self.at("}"):
            decl = self.parse_variable_declaration(allow_storage=False)
            self.expect(";")
            members.append(decl)
        self.expect("}")
        return self.node("StructDefinition", start, members, name=name)

    def parse_enum(self) -> AstNode:
        start = self.next()
        name = self.expect_ident().text
        self.expect("{")
        values = []
        while not self.at("}"):
            values.append(self.expect_ident().text)
            if not self.accept(","):
                break
        self.expect("}")
        return self.node("EnumDefinition", start, name=name, values=values)

    def parse_event(self) -> AstNode:
        start = self.next()
        name = self.expect_ident().text
        params = self.parse_parameter_list(allow_indexed=True)
        self.accept("anonymous")
        self.expect(";")
        return self.node("EventDefinition", start, [params], name=name)

    def parse_error_definition(self) -> AstNode:
        start = self.next()
        name = self.expect_ident().text
        params = self.parse_parameter_list()
        self.expect(";")
        return self.node("CustomErrorDefinition", start, [params], name=name)

    def parse_using(self) -> AstNode:
        start = self.next()
        lib = self.expect_ident().text
        self.expect("for")
        if not self.accept("*"):
            self.parse_type_name()
        self.expect(";")
        return self.node("UsingForDirective", start, library=lib)

    def parse_state_variable(self) -> AstNode:
        start = self.peek()
        type_node = self.parse_type_name()
        visibility = None
        flags = []
        while self.peek().kind == "ident" and self.peek().text in (
            _VISIBILITY | {"constant", "immutable", "override"}
        ):
            tok = self.next()
            if tok.text in _VISIBILITY:
                visibility = tok.text
            else:
                flags.append(tok.text)
        name = self.expect_ident().text
        children = [type_node]
        init = None
        if self.accept("="):
            init = self.parse_expression()
            children.append(init)
        self.expect(";")
        return self.node(
            "StateVariableDeclaration", start, children,
            name=name, typeText=self.src.text(type_node.span),
            visibility=visibility or "internal", flags=flags, initialValue=init,
        )

    # -- functions and modifiers --------------------------------------------

    def parse_function(self, contract_name: str) -> AstNode:
        start = self.next()  # function | constructor | fallback | receive
        fn_kind = start.text
        name = None
        if fn_kind == "function":
            if self.peek().kind == "ident":
                name = self.next().text
            # else: 0.4 unnamed fallback `function () ...`
        params = self.parse_parameter_list()

        visibility = None
        visibility_span = None
        mutability = None
        mutability_span = None
        is_virtual = False
        overrides = False
        mod_invocations: list[AstNode] = []
        return_params = None
        while True:
            t = self.peek()
            if t.kind != "ident":
                break
            if t.text in _VISIBILITY:
                tok = self.next()
                if visibility is None:
                    visibility, visibility_span = tok.text, tok.span
            elif t.text in _MUTABILITY:
                tok = self.next()
                if mutability is None:
                    mutability, mutability_span = tok.text, tok.span
            elif t.text == "virtual":
                self.next()
                is_virtual = True
            elif t.text == "override":
                self.next()
                overrides = True
                if self.at("("):
                    self.skip_balanced("(", ")")
            elif t.text == "returns":
                self.next()
                return_params = self.parse_parameter_list()
                break
            else:
                mod_start = self.peek()
                mod_name = self.expect_ident().text
                args = self.parse_call_arguments() if self.at("(") else []
                mod_invocations.append(
                    self.node("ModifierInvocation", mod_start, args, name=mod_name)
                )

        body = None
        if self.at("{"):
            body = self.parse_block()
        else:
            self.expect(";")

        children = [params] + mod_invocations
        if return_params is not None:
            children.append(return_params)
        if body is not None:
            children.append(body)

        is_constructor = fn_kind == "constructor" or (
            name is not None and name == contract_name
        )
        is_fallback = fn_kind == "fallback" or (fn_kind == "function" and name is None)
        return self.node(
            "FunctionDefinition", start, children,
            name=name if fn_kind == "function" else fn_kind,
            functionKind=fn_kind,
            isConstructor=is_constructor,
            isFallback=is_fallback,
            isReceive=fn_kind == "receive",
            visibility=visibility or "default",
            visibilitySpan=visibility_span,
            stateMutability=mutability or "nonpayable",
            mutabilitySpan=mutability_span,
            virtual=is_virtual,
            overrides=overrides,
            modifiers=[m.attrs["name"] for m in mod_invocations],
            params=params,
            returnParams=return_params,
            body=body,
        )

    def parse_modifier(self) -> AstNode:
        start = self.next()
        name = self.expect_ident().text
        params = self.parse_parameter_list() if self.at("(") else None
        while self.peek().kind == "ident" and self.peek().text in ("virtual", "override"):
            self.next()
            if self.at("("):
                self.skip_balanced("(", ")")
        body = None
        children = [params] if params else []
        if self.at("{"):
            body = self.parse_block()
            children.append(body)
        else:
            self.expect(";")
        return self.node("ModifierDefinition", start, children, name=name, body=body)

    def parse_parameter_list(self, allow_indexed: bool = False) -> AstNode:
        start = self.expect("(")
        decls = []
        if not self.at(")"):
            while True:
                decls.append(self.parse_variable_declaration(allow_indexed=allow_indexed, name_optional=True))
                if not self.accept(","):
                    break
        self.expect(")")
        return self.node("ParameterList", start, decls)

    def parse_variable_declaration(
        self, allow_storage: bool = True, allow_indexed: bool = False, name_optional: bool = False
    ) -> AstNode:
        start = self.peek()
        type_node = self.parse_type_name()
        storage = None
        while self.peek().kind == "ident" and (
            (allow_storage and self.peek().text in _STORAGE)
            or (allow_indexed and self.peek().text == "indexed")
        ):
            tok = self.next()
            if tok.text in _STORAGE:
                storage = tok.text
        name = ""
        if self.peek().kind == "ident":
            name = self.next().text
        elif not name_optional:
            raise self.error("expected variable name")
        return self.node(
            "VariableDeclaration", start, [type_node],
            name=name, typeText=self.src.text(type_node.span),
            isAddress=type_node.attrs.get("isAddress", False), storage=storage,
        )

    # -- type names ----------------------------------------------------------

    def parse_type_name(self) -> AstNode:
        start = self.peek()
        if self.at_ident("mapping"):
            self.next()
            self.expect("(")
            self.parse_type_name()
            self.expect("=>")
            self.parse_type_name()
            self.expect(")")
            base = self.node("Mapping", start)
        elif self.at_ident("function"):
            self.next()
            self.skip_balanced("(", ")")
            while self.peek().kind == "ident" and self.peek().text in (_VISIBILITY | _MUTABILITY):
                self.next()
            if self.accept("returns"):
                self.skip_balanced("(", ")")
            base = self.node("FunctionTypeName", start)
        elif self.peek().kind == "ident" and _ELEMENTARY_RE.match(self.peek().text):
            tok = self.next()
            is_address = tok.text == "address"
            if is_address and self.at_ident("payable"):
                self.next()
            base = self.node("ElementaryTypeName", start, name=tok.text, isAddress=is_address)
        elif self.peek().kind == "ident":
            self.next()
            while self.at(".") and self.peek(1).kind == "ident":
                self.next()
                self.next()
            base = self.node("UserDefinedTypeName", start, name=self.src.text(self.span_from(start)))
        else:
            raise self.error(f"expected type name, found {self.peek().text!r}")

        is_array = False
        while self.at("["):
            self.next()
            if not self.at("]"):
                self.parse_expression()
            self.expect("]")
            is_array = True
        if is_array:
            arr = self.node("ArrayTypeName", start, [base])
            arr.attrs["isAddress"] = False
            return arr
        return base

    def skip_balanced(self, open_tok: str, close_tok: str) -> None:
        self.expect(open_tok)
        depth = 1
        while depth:
            t = self.next()
            if t.kind == "eof":
                raise self.error(f"unbalanced {open_tok!r}")
            if t.text == open_tok:
                depth += 1
            elif t.text == close_tok:
                depth -= 1

    # -- statements -----------------------------------------------------------

    def parse_block(self) -> AstNode:
        start = self.expect("{")
        stmts = []
        while not self.at("}"):
            if self.peek().kind == "eof":
                raise self.error("unterminated block")
            stmts.append(self.parse_statement())
        self.expect("}")
        return self.node("Block", start, stmts)

    def parse_statement(self) -> AstNode:
        t = self.peek()
        if self.at("{"):
            return self.parse_block()
        if self.at_ident("if"):
            return self.parse_if()
        if self.at_ident("for"):
            return self.parse_for()
        if self.at_ident("while"):
            return self.parse_while()
        if self.at_ident("do"):
            return self.parse_do_while()
        if self.at_ident("return"):
            start = self.next()
            expr = None
            children = []
            if not self.at(";"):
                expr = self.parse_expression()
                children.append(expr)
            self.expect(";")
            return self.node("ReturnStatement", start, children, expression=expr)
        if self.at_ident("break"):
            start = self.next()
            self.expect(";")
            return self.node("BreakStatement", start)
        if self.at_ident("continue"):
            start = self.next()
            self.expect(";")
            return self.node("ContinueStatement", start)
        if self.at_ident("throw"):
            start = self.next()
            self.expect(";")
            return self.node("ThrowStatement", start)
        if self.at_ident("emit"):
            start = self.next()
            call = self.parse_expression()
            self.expect(";")
            return self.node("EmitStatement", start, [call], call=call)
        if self.at_ident("unchecked"):
            start = self.next()
            block = self.parse_block()
            return self.node("UncheckedBlock", start, [block])
        if self.at_ident("assembly"):
            raise self.unsupported("inline assembly")
        if self.at_ident("try"):
            raise self.unsupported("try/catch statement")
        if self.at_ident("revert") and self.peek(1).kind == "ident":
            start = self.next()
            err_start = self.peek()
            name = [self.expect_ident().text]
            while self.accept("."):
                name.append(self.expect_ident().text)
            args = self.parse_call_arguments()
            call = self.node("FunctionCall", err_start, args, name=".".join(name))
            self.expect(";")
            return self.node("RevertStatement", start, [call])
        if self.at_ident("_") and self.peek(1).text == ";":
            start = self.next()
            self.expect(";")
            return self.node("PlaceholderStatement", start)

        decl = self.try_parse_variable_declaration_statement()
        if decl is not None:
            return decl

        start = t
        expr = self.parse_expression()
        self.expect(";")
        return self.node("ExpressionStatement", start, [expr], expression=expr)

    def try_parse_variable_declaration_statement(self) -> Optional[AstNode]:
        saved = self.pos
        try:
            return self.parse_variable_declaration_statement()
        except ParseError:
            self.pos = saved
            return None

    def parse_variable_declaration_statement(self) -> AstNode:
        start = self.peek()
        declarations: list[Optional[AstNode]] = []
        children: list[AstNode] = []

        if self.at_ident("var"):
            self.next()
            if self.at("("):
                self.next()
                while True:
                    if self.at(",") or self.at(")"):
                        declarations.append(None)
                    else:
                        name_tok = self.expect_ident()
                        decl = AstNode(
                            "VariableDeclaration", name_tok.span, [],
                            {"name": name_tok.text, "typeText": "var", "isAddress": False, "storage": None},
                        )
                        declarations.append(decl)
                        children.append(decl)
                    if not self.accept(","):
                        break
                self.expect(")")
            else:
                name_tok = self.expect_ident()
                decl = AstNode(
                    "VariableDeclaration", name_tok.span, [],
                    {"name": name_tok.text, "typeText": "var", "isAddress": False, "storage": None},
                )
                declarations.append(decl)
                children.append(decl)
        elif self.at("("):
            self.next()
            while True:
                if self.at(",") or self.at(")"):
                    declarations.append(None)
                else:
                    decl = self.parse_variable_declaration()
                    declarations.append(decl)
                    children.append(decl)
                if not self.accept(","):
                    break
            self.expect(")")
            if not self.at("="):
                raise self.error("not a tuple declaration")
        else:
            decl = self.parse_variable_declaration()
            declarations.append(decl)
            children.append(decl)

        init = None
        if self.accept("="):
            init = self.parse_expression()
            children.append(init)
        self.expect(";")
        return self.node(
            "VariableDeclarationStatement", start, children,
            declarations=declarations, initialValue=init,
        )

    def parse_if(self) -> AstNode:
        start = self.next()
        self.expect("(")
        cond = self.parse_expression()
        self.expect(")")
        true_body = self.parse_statement()
        false_body = None
        children = [cond, true_body]
        if self.accept("else"):
            false_body = self.parse_statement()
            children.append(false_body)
        return self.node(
            "IfStatement", start, children,
            condition=cond, trueBody=true_body, falseBody=false_body,
        )

    def parse_for(self) -> AstNode:
        start = self.next()
        self.expect("(")
        init = None
        if not self.accept(";"):
            init = self.try_parse_variable_declaration_statement()
            if init is None:
                init_start = self.peek()
                expr = self.parse_expression()
                self.expect(";")
                init = self.node("ExpressionStatement", init_start, [expr], expression=expr)
        cond = None
        if not self.at(";"):
            cond = self.parse_expression()
        self.expect(";")
        update = None
        if not self.at(")"):
            update_start = self.peek()
            expr = self.parse_expression()
            update = self.node("ExpressionStatement", update_start, [expr], expression=expr)
        self.expect(")")
        body = self.parse_statement()
        children = [c for c in (init, cond, update, body) if c is not None]
        return self.node(
            "ForStatement", start, children,
            init=init, condition=cond, update=update, body=body,
        )

    def parse_while(self) -> AstNode:
        start = self.next()
        self.expect("(")
        cond = self.parse_expression()
        self.expect(")")
        body = self.parse_statement()
        return self.node("WhileStatement", start, [cond, body], condition=cond, body=body)

    def parse_do_while(self) -> AstNode:
        start = self.next()
        body = self.parse_statement()
        self.expect("while")
        self.expect("(")
        cond = self.parse_expression()
        self.expect(")")
        self.expect(";")
        return self.node("DoWhileStatement", start, [body, cond], condition=cond, body=body)

    # -- expressions -----------------------------------------------------------

    def parse_expression(self) -> AstNode:
        return self.parse_assignment()

    def parse_assignment(self) -> AstNode:
        start = self.peek()
        left = self.parse_ternary()
        t = self.peek()
        if t.kind == "punct" and t.text in _ASSIGN_OPS:
            op_tok = self.next()
            right = self.parse_assignment()
            return self.node(
                "Assignment", start, [left, right],
                operator=op_tok.text, operatorSpan=op_tok.span, left=left, right=right,
            )
        return left

    def parse_ternary(self) -> AstNode:
        start = self.peek()
        cond = self.parse_binary(0)
        if self.at("?"):
            self.next()
            true_expr = self.parse_ternary()
            self.expect(":")
            false_expr = self.parse_ternary()
            return self.node(
                "Conditional", start, [cond, true_expr, false_expr],
                condition=cond, trueExpression=true_expr, falseExpression=false_expr,
            )
        return cond

    def parse_binary(self, level: int) -> AstNode:
        if level >= len(_BINARY_LEVELS):
            return self.parse_unary()
        ops, right_assoc = _BINARY_LEVELS[level]
        start = self.peek()
        left = self.parse_binary(level + 1)
        while True:
            t = self.peek()
            if t.kind != "punct" or t.text not in ops:
                return left
            op_tok = self.next()
            right = self.parse_binary(level if right_assoc else level + 1)
            left = self.node(
                "BinaryOperation", start, [left, right],
                operator=op_tok.text, operatorSpan=op_tok.span, left=left, right=right,
            )
            if right_assoc:
                return left

    def parse_unary(self) -> AstNode:
        t = self.peek()
        if t.kind == "punct" and t.text in ("!", "~", "-", "+", "++", "--"):
            start = self.next()
            sub = self.parse_unary()
            return self.node(
                "UnaryOperation", start, [sub],
                operator=start.text, prefix=True, subExpression=sub,
            )
        if self.at_ident("delete"):
            start = self.next()
            sub = self.parse_unary()
            return self.node(
                "UnaryOperation", start, [sub],
                operator="delete", prefix=True, subExpression=sub,
            )
        if self.at_ident("new"):
            start = self.next()
            type_node = self.parse_type_name()
            new_node = self.node(
                "NewExpression", start, [],
                typeText=self.src.text(type_node.span),
            )
            return self.parse_postfix_chain(new_node, start)
        return self.parse_postfix()

    def parse_postfix(self) -> AstNode:
        start = self.peek()
        expr = self.parse_primary()
        return self.parse_postfix_chain(expr, start)

    def parse_postfix_chain(self, expr: AstNode, start: Token) -> AstNode:
        while True:
            t = self.peek()
            if t.text == "." and self.peek(1).kind == "ident":
                self.next()
                member_tok = self.next()
                expr = self.node(
                    "MemberAccess", start, [expr],
                    expression=expr, memberName=member_tok.text, memberSpan=member_tok.span,
                )
            elif t.text == "(":
                args = self.parse_call_arguments()
                expr = self.node(
                    "FunctionCall", start, [expr] + args,
                    expression=expr, arguments=args,
                )
            elif t.text == "{" and self._looks_like_call_options():
                options, names = self.parse_call_options()
                expr = self.node(
                    "FunctionCallOptions", start, [expr] + options,
                    expression=expr, options=options, optionNames=names,
                )
            elif t.text == "[":
                self.next()
                index = None
                children = [expr]
                if not self.at("]"):
                    index = self.parse_expression()
                    children.append(index)
                self.expect("]")
                expr = self.node("IndexAccess", start, children, base=expr, index=index)
            elif t.text in ("++", "--"):
                op_tok = self.next()
                expr = self.node(
                    "UnaryOperation", start, [expr],
                    operator=op_tok.text, prefix=False, subExpression=expr,
                )
            else:
                return expr

    def _looks_like_call_options(self) -> bool:
        # Distinguish `f{value: x}(...)` from a block statement starting with `{`.
        return (
            self.peek().text == "{"
            and self.peek(1).kind == "ident"
            and self.peek(2).text == ":"
        )

    def parse_call_options(self) -> tuple[list[AstNode], list[str]]:
        self.expect("{")
        options = []
        names = []
        while not self.at("}"):
            names.append(self.expect_ident().text)
            self.expect(":")
            options.append(self.parse_expression())
            if not self.accept(","):
                break
        self.expect("}")
        return options, names

    def parse_call_arguments(self) -> list[AstNode]:
        self.expect("(")
        args = []
        if self.at("{"):
            # Named arguments: f({a: 1, b: 2})
            self.next()
            while not self.at("}"):
                self.expect_ident()
                self.expect(":")
                args.append(self.parse_expression())
                if not self.accept(","):
                    break
            self.expect("}")
        elif not self.at(")"):
            while True:
                args.append(self.parse_expression())
                if not self.accept(","):
                    break
        self.expect(")")
        return args

    def parse_primary(self) -> AstNode:
        t = self.peek()
        if t.kind == "number":
            tok = self.next()
            sub = None
            if self.peek().kind == "ident" and self.peek().text in _SUBDENOMINATIONS:
                sub = self.next().text
            return AstNode(
                "Literal", tok.span, [],
                {"value": tok.text, "literalClass": "number", "subdenomination": sub},
            )
        if t.kind == "string":
            tok = self.next()
            cls = "hex" if tok.text.startswith("hex") else (
                "unicode" if tok.text.startswith("unicode") else "string"
            )
            return AstNode("Literal", tok.span, [], {"value": tok.text, "literalClass": cls})
        if t.kind == "ident":
            if t.text in ("true", "false"):
                tok = self.next()
                return AstNode(
                    "Literal", tok.span, [], {"value": tok.text, "literalClass": "bool"}
                )
            if _ELEMENTARY_RE.match(t.text) and t.text != "var":
                tok = self.next()
                if tok.text == "address" and self.at_ident("payable"):
                    self.next()
                return self.node("ElementaryTypeNameExpression", tok, name=tok.text)
            if t.text == "payable" and self.peek(1).text == "(":
                tok = self.next()
                return AstNode(
                    "ElementaryTypeNameExpression", tok.span, [], {"name": "payable"}
                )
            tok = self.next()
            return AstNode("Identifier", tok.span, [], {"name": tok.text})
        if t.text == "(":
            start = self.next()
            components: list[Optional[AstNode]] = []
            children = []
            while not self.at(")"):
                if self.at(","):
                    components.append(None)
                else:
                    comp = self.parse_expression()
                    components.append(comp)
                    children.append(comp)
                if not self.accept(","):
                    break
                if self.at(")"):
                    components.append(None)
            self.expect(")")
            return self.node(
                "TupleExpression", start, children,
                components=components, isArray=False,
            )
        if t.text == "[":
            start = self.next()
            children = []
            while not self.at("]"):
                children.append(self.parse_expression())
                if not self.accept(","):
                    break
            self.expect("]")
            return self.node(
                "TupleExpression", start, children,
                components=list(children), isArray=True,
            )
        raise self.error(f"unexpected token {t.text!r} in expression")
