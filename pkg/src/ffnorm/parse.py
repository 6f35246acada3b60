"""Parser for polynomial strings such as ``t^3 + (4*x^3+1)*t^2 - 2*x``.

Integers are read in decimal and reduced modulo q. Only the variables x and t
are recognised; the result is a dict mapping (deg_t, deg_x) to coefficients.
"""

from __future__ import annotations

import re

from .arith import Poly


class PolySyntaxError(ValueError):
    def __init__(self, message: str, text: str, column: int, line: int | None = None):
        self.column = column
        self.line = line
        self.text = text
        where = f"line {line}, column {column}" if line is not None else f"column {column}"
        super().__init__(f"{message} at {where}: {text!r}")


_TOKEN = re.compile(r"\s*(?:(\d+)|([a-zA-Z_]\w*)|(\S))")


def _tokenize(text: str):
    pos = 0
    out = []
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            break
        if m.group(1) is not None:
            out.append(("int", int(m.group(1)), m.start(1)))
        elif m.group(2) is not None:
            out.append(("name", m.group(2), m.start(2)))
        elif m.group(3) is not None:
            out.append(("op", m.group(3), m.start(3)))
        pos = m.end()
    out.append(("end", None, len(text)))
    return out


def _add(a: dict, b: dict, q: int, sign: int = 1) -> dict:
    r = dict(a)
    for k, v in b.items():
        r[k] = (r.get(k, 0) + sign * v) % q
    return {k: v for k, v in r.items() if v}


def _mul(a: dict, b: dict, q: int) -> dict:
    r = {}
    for (i1, j1), v1 in a.items():
        for (i2, j2), v2 in b.items():
            k = (i1 + i2, j1 + j2)
            r[k] = (r.get(k, 0) + v1 * v2) % q
    return {k: v for k, v in r.items() if v}


class _Parser:
    def __init__(self, text: str, q: int, variables=("t", "x")):
        self.text = text
        self.q = q
        self.variables = variables
        self.toks = _tokenize(text)
        self.i = 0

    def error(self, msg, tok=None):
        tok = tok or self.toks[self.i]
        raise PolySyntaxError(msg, self.text, tok[2] + 1)

    def peek(self):
        return self.toks[self.i]

    def take(self):
        tok = self.toks[self.i]
        self.i += 1
        return tok

    def parse(self) -> dict:
        if self.peek()[0] == "end":
            self.error("empty polynomial")
        r = self.expr()
        if self.peek()[0] != "end":
            self.error("unexpected token")
        return r

    def expr(self):
        sign = 1
        tok = self.peek()
        if tok == ("op", "-", tok[2]):
            self.take()
            sign = -1
        elif tok == ("op", "+", tok[2]):
            self.take()
        r = _add({}, self.term(), self.q, sign)
        while True:
            tok = self.peek()
            if tok[0] == "op" and tok[1] in "+-":
                self.take()
                r = _add(r, self.term(), self.q, 1 if tok[1] == "+" else -1)
            else:
                return r

    def term(self):
        r = self.power()
        while True:
            tok = self.peek()
            if tok[0] == "op" and tok[1] == "*":
                self.take()
                r = _mul(r, self.power(), self.q)
            elif tok[0] in ("int", "name") or tok == ("op", "(", tok[2]):
                # implicit multiplication, e.g. 3x or (x+1)(x+2)
                r = _mul(r, self.power(), self.q)
            else:
                return r

    def power(self):
        base = self.atom()
        tok = self.peek()
        if tok[0] == "op" and tok[1] in ("^",) or (tok[0] == "op" and tok[1] == "*" and self._is_starstar()):
            if tok[1] == "*":
                self.take()
            self.take()
            etok = self.take()
            if etok[0] != "int":
                self.error("exponent must be a non-negative integer", etok)
            r = {(0, 0): 1}
            for _ in range(etok[1]):
                r = _mul(r, base, self.q)
            return r
        return base

    def _is_starstar(self):
        nxt = self.toks[self.i + 1]
        return nxt[0] == "op" and nxt[1] == "*"

    def atom(self):
        tok = self.take()
        kind, val, _ = tok
        if kind == "int":
            v = val % self.q
            return {(0, 0): v} if v else {}
        if kind == "name":
            if val not in self.variables:
                self.error(f"unknown variable {val!r}", tok)
            return {(1, 0): 1} if val == self.variables[0] else {(0, 1): 1}
        if kind == "op" and val == "(":
            r = self.expr()
            close = self.take()
            if close[0] != "op" or close[1] != ")":
                self.error("expected ')'", close)
            return r
        if kind == "end":
            self.error("unexpected end of input", tok)
        self.error("unexpected token", tok)


def parse_bivariate(text: str, q: int) -> dict:
    """Parse a polynomial in t with k[x] coefficients into {(deg_t, deg_x): c}."""
    return _Parser(text, q).parse()


def parse_poly(text: str, q: int, var: str = "x") -> Poly:
    """Parse a univariate polynomial in ``var`` over F_q."""
    terms = _Parser(text, q, variables=("_unused_", var)).parse()
    deg = max((j for (_, j) in terms), default=-1)
    c = [0] * (deg + 1)
    for (_, j), v in terms.items():
        c[j] = v
    return Poly(c, q)


def bivariate_to_coeffs(terms: dict, q: int) -> list[Poly]:
    """{(i, j): c} -> [a_0(x), ..., a_n(x)] with f = sum a_i(x) t^i."""
    n = max((i for (i, _) in terms), default=0)
    cols = [[0] * (1 + max((j for (i2, j) in terms if i2 == i), default=0)) for i in range(n + 1)]
    for (i, j), v in terms.items():
        cols[i][j] = v
    return [Poly(c, q) for c in cols]
