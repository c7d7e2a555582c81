"""Text form of gross numbers.

Grammar (whitespace is insignificant between tokens)::

    number  := signedterm (("+"|"-") term)*
    term    := coeff ("G" ("^" power)?)? | "G" ("^" power)?
    coeff   := decimal | integer "/" positive-integer
    power   := signed-decimal | "{" number "}"

``G`` stands for grossone.  Decimal literals are exact: ``7.6`` is 38/5.
"""

from __future__ import annotations

from fractions import Fraction

from .core import GrossNumber, _is_zero_power, _lift, normalize
from .errors import GrossSyntaxError

__all__ = ["parse_number", "format_number", "format_digit", "Scanner"]


class Scanner:
    """Character-level cursor with whitespace skipping."""

    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def skip(self) -> None:
        n = len(self.text)
        while self.pos < n and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def peek_word(self, word: str) -> bool:
        self.skip()
        if not self.text.startswith(word, self.pos):
            return False
        end = self.pos + len(word)
        return end >= len(self.text) or not (self.text[end].isalnum() or self.text[end] == "_")

    def accept(self, s: str) -> bool:
        if self.peek() and self.text.startswith(s, self.pos):
            self.pos += len(s)
            return True
        return False

    def expect(self, s: str) -> None:
        if not self.accept(s):
            raise self.error(f"expected {s!r}")

    def at_end(self) -> bool:
        return self.peek() == ""

    def error(self, message: str) -> GrossSyntaxError:
        return GrossSyntaxError(message, self.text, self.pos)

    def read_digits(self) -> str:
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        return self.text[start : self.pos]

    def read_decimal(self) -> tuple[Fraction, bool] | None:
        """Unsigned ``digits ('.' digits)?``; returns (value, had_point)."""
        self.skip()
        start = self.pos
        whole = self.read_digits()
        if not whole:
            self.pos = start
            return None
        if self.pos + 1 < len(self.text) and self.text[self.pos] == "." and self.text[self.pos + 1].isdigit():
            self.pos += 1
            frac = self.read_digits()
            return Fraction(int(whole + frac), 10 ** len(frac)), True
        return Fraction(int(whole)), False

    def read_signed_decimal(self) -> Fraction:
        sign = 1
        if self.accept("-"):
            sign = -1
        elif self.accept("+"):
            pass
        got = self.read_decimal()
        if got is None:
            raise self.error("expected a decimal grosspower")
        return sign * got[0]


def _read_coeff(sc: Scanner) -> Fraction | None:
    got = sc.read_decimal()
    if got is None:
        return None
    value, had_point = got
    if not had_point and sc.peek() == "/":
        save = sc.pos
        sc.accept("/")
        den = sc.read_decimal()
        if den is None or den[1] or den[0] == 0:
            sc.pos = save
            raise sc.error("expected a positive integer denominator")
        value = value / den[0]
    return value


def read_power(sc: Scanner):
    if sc.accept("{"):
        p = read_number(sc)
        sc.expect("}")
        return p
    return sc.read_signed_decimal()


def read_term(sc: Scanner, sign: int) -> tuple[Fraction, object]:
    coeff = _read_coeff(sc)
    if sc.peek() == "G":
        sc.accept("G")
        power = read_power(sc) if sc.accept("^") else Fraction(1)
        return sign * (coeff if coeff is not None else Fraction(1)), power
    if coeff is None:
        raise sc.error("expected a grossdigit or G")
    return sign * coeff, Fraction(0)


def read_number(sc: Scanner) -> GrossNumber:
    sign = 1
    if sc.accept("-"):
        sign = -1
    else:
        sc.accept("+")
    raw = [read_term(sc, sign)]
    while True:
        c = sc.peek()
        if c == "+" or c == "-":
            sc.accept(c)
            raw.append(read_term(sc, -1 if c == "-" else 1))
        else:
            break
    return normalize(raw)


def parse_number(text: str) -> GrossNumber:
    """Parse a gross-number literal such as ``"7.6G^{24.5G-7.1} + 70"``."""
    sc = Scanner(text)
    if sc.at_end():
        raise sc.error("empty number")
    value = read_number(sc)
    if not sc.at_end():
        raise sc.error("unexpected trailing text")
    return value


# -- formatting ---------------------------------------------------------------


def _decimal_places(den: int) -> int | None:
    twos = fives = 0
    while den % 2 == 0:
        den //= 2
        twos += 1
    while den % 5 == 0:
        den //= 5
        fives += 1
    return max(twos, fives) if den == 1 else None


def format_digit(d: Fraction) -> str:
    """Terminating decimals print as decimals, the rest as ``p/q``."""
    places = _decimal_places(d.denominator)
    if places is None:
        return f"{d.numerator}/{d.denominator}"
    if places == 0:
        return str(d.numerator)
    scaled = abs(d.numerator) * 10**places // d.denominator
    s = str(scaled).rjust(places + 1, "0")
    out = f"{s[:-places]}.{s[-places:]}"
    return "-" + out if d < 0 else out


def _power_suffix(p) -> str:
    if type(p) is Fraction:
        if p == 1:
            return ""
        if _decimal_places(p.denominator) is not None:
            return "^" + format_digit(p)
    return "^{" + format_number(_lift(p)) + "}"


def format_number(a: GrossNumber) -> str:
    if a.is_zero():
        return "0"
    out = []
    for i, (d, p) in enumerate(a._terms):
        mag = -d if d < 0 else d
        if _is_zero_power(p):
            body = format_digit(mag)
        else:
            body = ("" if mag == 1 else format_digit(mag)) + "G" + _power_suffix(p)
        if i == 0:
            out.append(("-" if d < 0 else "") + body)
        else:
            out.append((" - " if d < 0 else " + ") + body)
    return "".join(out)
