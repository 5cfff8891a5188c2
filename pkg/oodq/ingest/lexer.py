"""
Лексер ODL
"""
import re
from dataclasses import dataclass
from enum import Enum
from typing import Iterator, List

from oodq.exceptions import LexError
from oodq.utils.validators import KEYWORDS


class TokenType(Enum):
    """Типы токенов ODL"""
    IDENT = "identifier"
    KEYWORD = "keyword"
    LBRACE = "'{'"
    RBRACE = "'}'"
    LPAREN = "'('"
    RPAREN = "')'"
    COMMA = "','"
    SEMICOLON = "';'"
    STRING = "literal"
    NUMBER = "number"
    OTHER = "symbol"
    EOF = "end of input"


PUNCTUATION = {
    "{": TokenType.LBRACE,
    "}": TokenType.RBRACE,
    "(": TokenType.LPAREN,
    ")": TokenType.RPAREN,
    ",": TokenType.COMMA,
    ";": TokenType.SEMICOLON,
}

IDENT_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")
NUMBER_RE = re.compile(r"[0-9][A-Za-z0-9_.]*")
WHITESPACE_RE = re.compile(r"[ \t\r\f\v]+")


@dataclass(frozen=True)
class SourcePosition:
    """Позиция в исходном файле (строки и столбцы с единицы)"""
    file: str
    line: int
    column: int

    def __str__(self) -> str:
        return f"{self.file}:{self.line}:{self.column}"


@dataclass(frozen=True)
class Token:
    """Токен с позицией и признаком предшествующего doc-комментария"""
    type: TokenType
    lexeme: str
    position: SourcePosition
    documented: bool = False

    def is_keyword(self, *words: str) -> bool:
        return self.type is TokenType.KEYWORD and self.lexeme in words


class Lexer:
    """
    Сканер ODL

    Комментарии `//` и `/* */` пропускаются. Doc-комментарий `/** */` не
    порождает токена, а помечает следующий токен флагом documented.
    Строковые и символьные литералы распознаются только для того, чтобы
    скобки внутри них не ломали пропуск тел методов.
    """

    def __init__(self, text: str, file: str = "<input>"):
        self.text = text
        self.file = file
        self.offset = 0
        self.line = 1
        self.column = 1

    def _position(self) -> SourcePosition:
        return SourcePosition(self.file, self.line, self.column)

    def _advance(self, count: int) -> str:
        chunk = self.text[self.offset:self.offset + count]
        newlines = chunk.count("\n")
        if newlines:
            self.line += newlines
            self.column = len(chunk) - chunk.rfind("\n")
        else:
            self.column += len(chunk)
        self.offset += count
        return chunk

    def _block_comment(self) -> bool:
        """Пропуск блочного комментария, возвращает True для doc-комментария"""
        start = self._position()
        body_start = self.offset + 2
        end = self.text.find("*/", body_start)
        if end < 0:
            raise LexError(start, "'*/'", "<EOF>")
        is_doc = self.text.startswith("/**", self.offset) and end > body_start
        self._advance(end + 2 - self.offset)
        return is_doc

    def _string(self) -> Token:
        start = self._position()
        quote = self.text[self.offset]
        index = self.offset + 1
        while index < len(self.text):
            char = self.text[index]
            if char == "\\":
                index += 2
                continue
            if char == "\n":
                break
            if char == quote:
                lexeme = self._advance(index + 1 - self.offset)
                return Token(TokenType.STRING, lexeme, start)
            index += 1
        raise LexError(start, f"closing {quote}", "<EOL>" if index < len(self.text) else "<EOF>")

    def tokens(self) -> Iterator[Token]:
        """Поток токенов, завершающийся EOF"""
        text = self.text
        documented = False
        while self.offset < len(text):
            char = text[self.offset]

            if char == "\n":
                self._advance(1)
                continue
            match = WHITESPACE_RE.match(text, self.offset)
            if match:
                self._advance(match.end() - self.offset)
                continue

            if text.startswith("//", self.offset):
                end = text.find("\n", self.offset)
                self._advance((len(text) if end < 0 else end) - self.offset)
                continue
            if text.startswith("/*", self.offset):
                documented = self._block_comment() or documented
                continue

            position = self._position()
            if char in PUNCTUATION:
                token = Token(PUNCTUATION[char], self._advance(1), position, documented)
            elif char in "\"'":
                token = self._string()
            else:
                match = IDENT_RE.match(text, self.offset) or NUMBER_RE.match(text, self.offset)
                if match:
                    lexeme = self._advance(match.end() - self.offset)
                    if lexeme in KEYWORDS:
                        token_type = TokenType.KEYWORD
                    elif lexeme[0].isdigit():
                        token_type = TokenType.NUMBER
                    else:
                        token_type = TokenType.IDENT
                    token = Token(token_type, lexeme, position, documented)
                else:
                    token = Token(TokenType.OTHER, self._advance(1), position, documented)

            documented = False
            yield token

        yield Token(TokenType.EOF, "", self._position(), documented)


def tokenize(text: str, file: str = "<input>") -> List[Token]:
    """Полный список токенов текста"""
    return list(Lexer(text, file).tokens())
