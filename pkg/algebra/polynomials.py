"""
精确整数多项式与形式幂级数系数

单变量多项式以系数元组存储，coefficients[k] 为 t^k 的系数，末尾不留零。
多变量多项式包装 sympy Poly（QQ 上），变量为 m1..mr。
"""

from fractions import Fraction

from sympy import QQ, Poly, Rational, symbols

from utils.exceptions import NonUnitConstantTerm


def _normalize(coefficients):
    """去掉末尾的零系数"""
    coefficients = list(coefficients)
    while coefficients and not coefficients[-1]:
        coefficients.pop()
    return tuple(coefficients)


class IntPolynomial:
    """整系数单变量多项式"""

    __slots__ = ('coefficients',)

    def __init__(self, coefficients=()):
        self.coefficients = _normalize(int(c) for c in coefficients)

    @classmethod
    def monomial(cls, power, coefficient=1):
        return cls([0] * power + [coefficient])

    @classmethod
    def constant(cls, value):
        return cls([value])

    @property
    def degree(self):
        """次数；零多项式为 -1"""
        return len(self.coefficients) - 1

    def coefficient(self, k):
        return self.coefficients[k] if 0 <= k < len(self.coefficients) else 0

    def is_zero(self):
        return not self.coefficients

    def __call__(self, t):
        value = 0
        for c in reversed(self.coefficients):
            value = value * t + c
        return value

    def __add__(self, other):
        other = _coerce(other)
        size = max(len(self.coefficients), len(other.coefficients))
        return IntPolynomial(self.coefficient(k) + other.coefficient(k) for k in range(size))

    __radd__ = __add__

    def __neg__(self):
        return IntPolynomial(-c for c in self.coefficients)

    def __sub__(self, other):
        return self + (-_coerce(other))

    def __rsub__(self, other):
        return _coerce(other) - self

    def __mul__(self, other):
        other = _coerce(other)
        if self.is_zero() or other.is_zero():
            return IntPolynomial()
        result = [0] * (len(self.coefficients) + len(other.coefficients) - 1)
        for i, a in enumerate(self.coefficients):
            if not a:
                continue
            for j, b in enumerate(other.coefficients):
                result[i + j] += a * b
        return IntPolynomial(result)

    __rmul__ = __mul__

    def __pow__(self, exponent):
        if exponent < 0:
            raise ValueError("指数必须非负")
        result = IntPolynomial([1])
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def reverse(self, degree=None):
        """t^d · p(1/t)"""
        degree = self.degree if degree is None else degree
        return IntPolynomial(self.coefficient(degree - k) for k in range(degree + 1))

    def truncate(self, degree):
        return IntPolynomial(self.coefficients[:degree + 1])

    def __eq__(self, other):
        if isinstance(other, int):
            other = IntPolynomial.constant(other)
        return isinstance(other, IntPolynomial) and self.coefficients == other.coefficients

    def __hash__(self):
        return hash(self.coefficients)

    def to_list(self):
        return list(self.coefficients)

    def to_sympy(self, variable='t'):
        t = symbols(variable)
        return Poly(list(reversed(self.coefficients)) or [0], t)

    def __str__(self):
        if self.is_zero():
            return "0"
        terms = []
        for k, c in enumerate(self.coefficients):
            if not c:
                continue
            sign = "-" if c < 0 else "+"
            magnitude = abs(c)
            if k == 0:
                body = str(magnitude)
            else:
                power = "t" if k == 1 else f"t^{k}"
                body = power if magnitude == 1 else f"{magnitude}{power}"
            terms.append((sign, body))
        first_sign, first_body = terms[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in terms[1:]:
            text += f" {sign} {body}"
        return text

    def __repr__(self):
        return f"IntPolynomial({list(self.coefficients)})"


def _coerce(value):
    if isinstance(value, IntPolynomial):
        return value
    return IntPolynomial.constant(value)


def series_coefficient(numerator, denominator, n):
    """
    形式幂级数 numerator / denominator 中 t^n 的系数

    分母常数项为 ±1 时逐项递推：a_k = s·(p_k - Σ_{j>=1} q_j a_(k-j))，s = q_0。

    Args:
        numerator: IntPolynomial
        denominator: IntPolynomial
        n: 非负整数

    Returns:
        int
    """
    return series_coefficients(numerator, denominator, n)[n]


def series_coefficients(numerator, denominator, n):
    """系数 a_0..a_n 的列表"""
    numerator, denominator = _coerce(numerator), _coerce(denominator)
    lead = denominator.coefficient(0)
    if lead not in (1, -1):
        raise NonUnitConstantTerm(f"分母常数项为 {lead}，必须为 ±1")
    coefficients = []
    for k in range(n + 1):
        value = numerator.coefficient(k)
        for j in range(1, min(k, denominator.degree) + 1):
            value -= denominator.coefficient(j) * coefficients[k - j]
        coefficients.append(value * lead)
    return coefficients


class MultiPoly:
    """有理系数多变量多项式，变量为 m1..mr"""

    def __init__(self, poly):
        self.poly = poly

    @classmethod
    def variables(cls, r):
        return symbols(f"m1:{r + 1}")

    @classmethod
    def from_expr(cls, expr, r):
        return cls(Poly(expr, *cls.variables(r), domain=QQ))

    @property
    def nvars(self):
        return len(self.poly.gens)

    def __call__(self, *point):
        value = Rational(self.poly.as_expr().subs(dict(zip(self.poly.gens, point))))
        return Fraction(int(value.p), int(value.q))

    def value(self, *point):
        """在整数点上求值，结果须为整数"""
        result = self(*point)
        if result.denominator != 1:
            raise ValueError(f"多项式在 {point} 处不取整数值: {result}")
        return result.numerator

    @property
    def total_degree(self):
        return -1 if self.poly.is_zero else int(self.poly.total_degree())

    def degrees(self):
        """各变量的次数，零多项式记为 -1"""
        if self.poly.is_zero:
            return tuple(-1 for _ in self.poly.gens)
        return tuple(int(d) for d in self.poly.degree_list())

    def coefficients(self):
        """{指数向量: Fraction}"""
        return {
            monomial: Fraction(int(c.p), int(c.q)) for monomial, c in self.poly.terms()
        }

    def __eq__(self, other):
        return isinstance(other, MultiPoly) and self.poly == other.poly

    def __str__(self):
        return str(self.poly.as_expr())

    def __repr__(self):
        return f"MultiPoly({self.poly.as_expr()})"
