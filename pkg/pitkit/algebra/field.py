"""
有限域 GF(q0^a)

元素编码为整数：系数向量 (c_0, ..., c_{a-1}) 按 q0 进制排列，c_0 为常数项。
阶不超过 TABLE_FIELD_ORDER 时加法与乘法查表（表由 numpy 按位运算一次性构造）；
更大的域在多项式基下用 numpy 系数数组直接运算，离散对数用小步大步法。
"""

from __future__ import annotations

import logging
from functools import cached_property, lru_cache
from itertools import product
from math import gcd, isqrt
from typing import Dict, List, Sequence, Tuple

import numpy as np

from ..errors import NotPrime
from ..perm.normal import prime_factors

logger = logging.getLogger(__name__)

# 加法表为 q×q
TABLE_FIELD_ORDER = 1 << 10
MAX_FIELD_ORDER = 1 << 32


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    p = 2
    while p * p <= n:
        if n % p == 0:
            return False
        p += 1
    return True


# ==================== 多项式（系数表，低次在前） ====================

def _poly_divides(divisor: Sequence[int], poly: Sequence[int], p: int) -> bool:
    rem = list(poly)
    deg_d = len(divisor) - 1
    inv_lead = pow(divisor[-1], p - 2, p)
    for k in range(len(rem) - 1, deg_d - 1, -1):
        c = rem[k] * inv_lead % p
        if c:
            for t in range(deg_d + 1):
                rem[k - deg_d + t] = (rem[k - deg_d + t] - c * divisor[t]) % p
    return not any(rem[:deg_d])


def _is_irreducible(poly: Sequence[int], p: int) -> bool:
    a = len(poly) - 1
    for deg in range(1, a // 2 + 1):
        for tail in product(range(p), repeat=deg):
            divisor = list(tail) + [1]
            if _poly_divides(divisor, poly, p):
                return False
    return True


def least_irreducible(p: int, a: int) -> Tuple[int, ...]:
    """字典序最小的首一不可约多项式（高次非首项系数为最高位）"""
    if a == 1:
        return (0, 1)
    for k in range(p ** a):
        coeffs = [(k // p ** i) % p for i in range(a)]
        poly = coeffs + [1]
        if coeffs[0] and _is_irreducible(poly, p):
            return tuple(poly)
    raise ValueError(f"GF({p}) 上不存在 {a} 次不可约多项式")


class FiniteField:
    """
    有限域 GF(q0^a)

    Attributes:
        q0: 特征
        a: 扩张次数
        q: 域的阶
        modulus: 模多项式系数（低次在前，首一）
        omega: 本原元
        tabulated: 是否查表运算（q ≤ TABLE_FIELD_ORDER）
    """

    def __init__(self, q0: int, a: int):
        if not is_prime(q0):
            raise NotPrime(f"特征 {q0} 不是素数", {"q0": q0})
        if a < 1:
            raise ValueError(f"扩张次数必须 ≥ 1: {a}")
        q = q0 ** a
        if q > MAX_FIELD_ORDER:
            raise ValueError(f"域阶 {q} 超过上限 {MAX_FIELD_ORDER}")
        self.q0, self.a, self.q = q0, a, q
        self.modulus = least_irreducible(q0, a)
        self._weights = q0 ** np.arange(a, dtype=np.int64)
        self._modulus = np.array(self.modulus, dtype=np.int64)
        self.tabulated = q <= TABLE_FIELD_ORDER

        self.omega = self._find_primitive()
        if self.tabulated:
            self._build_tables()
        logger.debug("构造 GF(%d^%d): modulus=%s omega=%d tabulated=%s",
                     q0, a, self.modulus, self.omega, self.tabulated)

    def _build_tables(self) -> None:
        q, q0 = self.q, self.q0
        values = np.arange(q, dtype=np.int64)
        add = np.zeros((q, q), dtype=np.int64)
        neg = np.zeros(q, dtype=np.int64)
        for i in range(self.a):
            weight = q0 ** i
            digit = (values // weight) % q0
            add += ((digit[:, None] + digit[None, :]) % q0) * weight
            neg += ((-digit) % q0) * weight
        self._add: List[List[int]] = add.tolist()
        self._neg: List[int] = neg.tolist()

        self._exp: List[int] = [1] * (q - 1)
        self._log: List[int] = [-1] * q
        x = 1
        for i in range(q - 1):
            self._exp[i] = x
            self._log[x] = i
            x = self._mul_poly(x, self.omega)

    # ---------- 多项式基 ----------

    def _vec(self, x: int) -> np.ndarray:
        return (x // self._weights) % self.q0

    def _unvec(self, v: np.ndarray) -> int:
        return int(v[:self.a] @ self._weights)

    def _add_poly(self, x: int, y: int) -> int:
        if self.a == 1:
            return (x + y) % self.q0
        if self.q0 == 2:
            return x ^ y
        return self._unvec((self._vec(x) + self._vec(y)) % self.q0)

    def _neg_poly(self, x: int) -> int:
        if self.a == 1:
            return -x % self.q0
        return self._unvec(-self._vec(x) % self.q0)

    def _mul_poly(self, x: int, y: int) -> int:
        if self.a == 1:
            return x * y % self.q0
        a, p = self.a, self.q0
        prod = np.convolve(self._vec(x), self._vec(y)) % p
        # modulus 首一
        for k in range(len(prod) - 1, a - 1, -1):
            c = prod[k]
            if c:
                prod[k - a:k + 1] = (prod[k - a:k + 1] - c * self._modulus) % p
        return self._unvec(prod)

    def _pow_poly(self, x: int, e: int) -> int:
        result = 1
        while e:
            if e & 1:
                result = self._mul_poly(result, x)
            x = self._mul_poly(x, x)
            e >>= 1
        return result

    def _find_primitive(self) -> int:
        n = self.q - 1
        if n == 1:
            return 1
        primes = prime_factors(n)
        for x in range(1, self.q):
            if all(self._pow_poly(x, n // p) != 1 for p in primes):
                return x
        raise ValueError("没有找到本原元")

    @cached_property
    def _baby_steps(self) -> Dict[int, int]:
        """ω^j ↦ j，0 ≤ j ≤ isqrt(q-1)"""
        steps: Dict[int, int] = {}
        x = 1
        for j in range(isqrt(self.q - 1) + 1):
            steps.setdefault(x, j)
            x = self._mul_poly(x, self.omega)
        return steps

    def _dlog_bsgs(self, x: int) -> int:
        n = self.q - 1
        m = isqrt(n) + 1
        giant = self._pow_poly(self.omega, (-m) % n)
        y = x
        for i in range(m + 1):
            j = self._baby_steps.get(y)
            if j is not None:
                return (i * m + j) % n
            y = self._mul_poly(y, giant)
        raise ValueError(f"{x} 不在 GF({self.q}) 的乘法群中")

    # ---------- 运算 ----------

    @property
    def zero(self) -> int:
        return 0

    @property
    def one(self) -> int:
        return 1

    @property
    def elements(self) -> range:
        return range(self.q)

    def add(self, x: int, y: int) -> int:
        if self.tabulated:
            return self._add[x][y]
        return self._add_poly(x, y)

    def neg(self, x: int) -> int:
        if self.tabulated:
            return self._neg[x]
        return self._neg_poly(x)

    def sub(self, x: int, y: int) -> int:
        return self.add(x, self.neg(y))

    def mul(self, x: int, y: int) -> int:
        if x == 0 or y == 0:
            return 0
        if self.tabulated:
            return self._exp[(self._log[x] + self._log[y]) % (self.q - 1)]
        return self._mul_poly(x, y)

    def inv(self, x: int) -> int:
        if x == 0:
            raise ZeroDivisionError("零元不可逆")
        return self.pow(x, -1)

    def div(self, x: int, y: int) -> int:
        return self.mul(x, self.inv(y))

    def pow(self, x: int, e: int) -> int:
        if x == 0:
            return 0 if e > 0 else 1
        if self.tabulated:
            return self._exp[(self._log[x] * e) % (self.q - 1)]
        return self._pow_poly(x, e % (self.q - 1))

    def exp(self, k: int) -> int:
        """ω^k"""
        if self.tabulated:
            return self._exp[k % (self.q - 1)]
        return self._pow_poly(self.omega, k % (self.q - 1))

    def dlog(self, x: int) -> int:
        if x == 0:
            raise ValueError("零元没有离散对数")
        if self.tabulated:
            return self._log[x]
        return self._dlog_bsgs(x)

    def frobenius(self, x: int, power: int = 1) -> int:
        """x ↦ x^{q0^power}"""
        return self.pow(x, self.q0 ** (power % self.a))

    def conj(self, x: int) -> int:
        """GF(q²) 上的共轭 x ↦ x^q"""
        if self.a % 2:
            raise ValueError(f"GF({self.q}) 不是二次扩张，没有共轭")
        return self.frobenius(x, self.a // 2)

    def element_order(self, x: int) -> int:
        if x == 0:
            raise ValueError("零元没有乘法阶")
        n = self.q - 1
        if self.tabulated:
            return n // gcd(n, self.dlog(x))
        order = n
        for p in prime_factors(n):
            while order % p == 0 and self._pow_poly(x, order // p) == 1:
                order //= p
        return order

    @property
    def subfield_order(self) -> int:
        """二次扩张时 q = sqrt(|F|)"""
        return self.q0 ** (self.a // 2)

    def format(self, x: int) -> str:
        return "0" if x == 0 else f"w{self.dlog(x)}"

    def __repr__(self) -> str:
        return f"GF({self.q0}^{self.a})"


@lru_cache(maxsize=32)
def make_field(q0: int, a: int = 1) -> FiniteField:
    """构造（并缓存）GF(q0^a)"""
    return FiniteField(q0, a)
