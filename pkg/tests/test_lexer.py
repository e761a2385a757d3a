import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))

from genprog import generate

from haci.diagnostics import Diagnostic
from haci.lang.lexer import Token, decode_string, scan, tokenize


def texts(tokens: list[Token]) -> list[str]:
    return [t.text for t in tokens]


def test_basic_statement():
    assert texts(tokenize("let x = 5;")) == ["let", "x", "=", "5", ";"]


def test_maximal_munch_triple_equals():
    assert texts(tokenize("a===b")) == ["a", "===", "b"]


def test_maximal_munch_family():
    assert texts(tokenize("a!==b")) == ["a", "!==", "b"]
    assert texts(tokenize("a==b")) == ["a", "==", "b"]
    assert texts(tokenize("x=>y")) == ["x", "=>", "y"]
    assert texts(tokenize("i++ + ++j")) == ["i", "++", "+", "++", "j"]
    assert texts(tokenize("a<<2>>b")) == ["a", "<<", "2", ">>", "b"]
    assert texts(tokenize("a&&b||c")) == ["a", "&&", "b", "||", "c"]
    assert texts(tokenize("a<=b>=c")) == ["a", "<=", "b", ">=", "c"]


def test_unterminated_string_is_syntax_diagnostic():
    result = tokenize('"abc')
    assert isinstance(result, Diagnostic)
    assert result.kind == "syntax"
    assert result.line == 1


def test_unterminated_block_comment():
    result = tokenize("let x; /* never ends")
    assert isinstance(result, Diagnostic)
    assert "comment" in result.message


def test_comments_kept_as_tokens():
    tokens = tokenize("x = 1; // note\n/* block */ y = 2;")
    kinds = [t.kind for t in tokens]
    assert kinds.count("comment") == 2


def test_string_decoding():
    assert decode_string('"a\\nb"') == "a\nb"
    assert decode_string("'it\\'s'") == "it's"
    assert decode_string('"tab\\there"') == "tab\there"


def test_unknown_glyphs_become_symbol_tokens():
    tokens = tokenize("x @ # y")
    assert texts(tokens) == ["x", "@", "#", "y"]
    assert all(t.kind in ("identifier", "symbol") for t in tokens)


def _offset(source: str, line: int, col: int) -> int:
    rows = source.split("\n")
    return sum(len(r) + 1 for r in rows[: line - 1]) + col


def assert_lossless(source: str) -> None:
    tokens, diag = scan(source)
    assert diag is None
    covered = []
    for tok in tokens:
        a = _offset(source, tok.span.start.line, tok.span.start.col)
        b = _offset(source, tok.span.end.line, tok.span.end.col)
        assert source[a:b] == tok.text
        covered.append((a, b))
    # spans are ordered, non-overlapping, and everything between is whitespace
    prev_end = 0
    for a, b in covered:
        assert a >= prev_end
        assert source[prev_end:a].strip() == ""
        prev_end = b
    assert source[prev_end:].strip() == ""


def test_lossless_over_corpus_lines():
    assert_lossless('if (x > y) { arr[i] = "hi"; } // done')
    assert_lossless("a += 1; b *= 2; /* multi\nline */ c--;")
    assert_lossless("")


def test_lossless_over_generated_programs():
    for seed in range(25):
        assert_lossless(generate(seed).source)
