"""
Парсер ODL методом рекурсивного спуска

    model      := classdecl*
    classdecl  := doc? ("class" | "interface") IDENT
                  ("extends" IDENT ("," IDENT)*)? "{" member* "}"
    member     := doc? visibility IDENT IDENT
                  ( ";" | "(" (IDENT IDENT ("," IDENT IDENT)*)? ")" (";" | block) )
    visibility := "public" | "protected" | "private"
    block      := "{" ... "}"
"""
import logging
from typing import List, Tuple

from oodq.design.models import AttributeDef, ClassDef, ClassKind, ClassModel, MethodDef, Visibility
from oodq.design.validation import validate
from oodq.exceptions import InvalidModelError, ParseError
from oodq.ingest.lexer import Token, TokenType, tokenize

logger = logging.getLogger(__name__)

VISIBILITIES = ("public", "protected", "private")


class Parser:
    """Парсер одного файла ODL"""

    def __init__(self, text: str, file: str = "<input>"):
        self.file = file
        self.tokens: List[Token] = tokenize(text, file)
        self.index = 0

    @property
    def lookahead(self) -> Token:
        return self.tokens[self.index]

    def _next(self) -> Token:
        token = self.tokens[self.index]
        if token.type is not TokenType.EOF:
            self.index += 1
        return token

    def _error(self, expected: str) -> ParseError:
        token = self.lookahead
        return ParseError(token.position, expected, token.lexeme or "<EOF>")

    def _match(self, token_type: TokenType) -> Token:
        if self.lookahead.type is not token_type:
            raise self._error(token_type.value)
        return self._next()

    def _ident(self) -> str:
        return self._match(TokenType.IDENT).lexeme

    def parse(self) -> ClassModel:
        """model := classdecl*"""
        classes: List[ClassDef] = []
        while self.lookahead.type is not TokenType.EOF:
            classes.append(self._class_decl())
        return ClassModel(classes=tuple(classes), files=(self.file,))

    def _class_decl(self) -> ClassDef:
        head = self.lookahead
        if not head.is_keyword("class", "interface"):
            raise self._error("'class' or 'interface'")
        self._next()
        kind = ClassKind(head.lexeme)
        name = self._ident()

        parents: List[str] = []
        if self.lookahead.is_keyword("extends"):
            self._next()
            parents.append(self._ident())
            while self.lookahead.type is TokenType.COMMA:
                self._next()
                parents.append(self._ident())

        self._match(TokenType.LBRACE)
        attributes: List[AttributeDef] = []
        methods: List[MethodDef] = []
        while self.lookahead.type is not TokenType.RBRACE:
            member = self._member()
            if isinstance(member, AttributeDef):
                attributes.append(member)
            else:
                methods.append(member)
        self._match(TokenType.RBRACE)

        return ClassDef(
            name=name,
            kind=kind,
            parents=tuple(parents),
            attributes=tuple(attributes),
            methods=tuple(methods),
            documented=head.documented,
        )

    def _member(self):
        head = self.lookahead
        if not head.is_keyword(*VISIBILITIES):
            raise self._error("visibility or '}'")
        self._next()
        visibility = Visibility(head.lexeme)
        type_name = self._ident()
        name = self._ident()

        if self.lookahead.type is TokenType.SEMICOLON:
            self._next()
            return AttributeDef(name, type_name, visibility, head.documented)

        self._match(TokenType.LPAREN)
        params = self._parameters()
        self._match(TokenType.RPAREN)
        if self.lookahead.type is TokenType.LBRACE:
            self._skip_block()
        elif self.lookahead.type is TokenType.SEMICOLON:
            self._next()
        else:
            raise self._error("';' or method body")
        return MethodDef(name, params, type_name, visibility, head.documented)

    def _parameters(self) -> Tuple[str, ...]:
        types: List[str] = []
        if self.lookahead.type is TokenType.IDENT:
            types.append(self._ident())
            self._ident()
            while self.lookahead.type is TokenType.COMMA:
                self._next()
                types.append(self._ident())
                self._ident()
        return tuple(types)

    def _skip_block(self) -> None:
        """Пропуск тела метода по балансу фигурных скобок"""
        opening = self._match(TokenType.LBRACE)
        depth = 1
        while depth:
            token = self._next()
            if token.type is TokenType.EOF:
                raise ParseError(token.position, f"'}}' closing body opened at {opening.position}", "<EOF>")
            if token.type is TokenType.LBRACE:
                depth += 1
            elif token.type is TokenType.RBRACE:
                depth -= 1


def parse_unit(text: str, file: str = "<input>") -> ClassModel:
    """Разбор файла без проверки ссылок (родители могут быть в других файлах)"""
    model = Parser(text, file).parse()
    logger.debug(f"{file}: разобрано классов: {len(model.classes)}")
    return model


def parse_source(text: str, file: str = "<input>") -> ClassModel:
    """Разбор самодостаточного файла ODL с проверкой инвариантов модели"""
    model = parse_unit(text, file)
    violations = validate(model)
    if violations:
        raise InvalidModelError(violations)
    return model


def write_source(model: ClassModel) -> str:
    """Обратное преобразование модели в текст ODL (тела методов не восстанавливаются)"""
    lines: List[str] = []
    for class_def in model.canonical().classes:
        if lines:
            lines.append("")
        if class_def.documented:
            lines.append("/** */")
        header = f"{class_def.kind.value} {class_def.name}"
        if class_def.parents:
            header += " extends " + ", ".join(class_def.parents)
        lines.append(header + " {")
        for attribute in class_def.attributes:
            if attribute.documented:
                lines.append("    /** */")
            lines.append(f"    {attribute.visibility.value} {attribute.type_name} {attribute.name};")
        for method in class_def.methods:
            if method.documented:
                lines.append("    /** */")
            params = ", ".join(f"{t} p{i}" for i, t in enumerate(method.parameter_types))
            lines.append(f"    {method.visibility.value} {method.return_type} {method.name}({params});")
        lines.append("}")
    return "\n".join(lines) + ("\n" if lines else "")
