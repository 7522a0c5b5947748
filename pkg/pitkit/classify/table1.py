"""
特殊对的算术判定表

每行一个族：给定参数，按印出的算术条件判定 (X, R) 是否为特殊对。
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Optional

from ..errors import UnknownLine

LINES = range(1, 11)


def multiplicative_order(base: int, modulus: int) -> Optional[int]:
    """o_r(base)；gcd(base, r) ≠ 1 时为 None"""
    if modulus == 1:
        return 1
    if gcd(base, modulus) != 1:
        return None
    k, x = 1, base % modulus
    while x != 1:
        x = x * base % modulus
        k += 1
    return k


def _is_prime(n: int) -> bool:
    return n >= 2 and all(n % p for p in range(2, int(n ** 0.5) + 1))


@dataclass(frozen=True)
class Table1Instance:
    """
    表中一行的参数

    Attributes:
        line: 行号 1..10
        r: 素数
        d, q0, a: 线性/酉族参数（q = q0^a）
        j: |X : X ∩ PGL| = a/j（酉族为 2a/j）
        x_index: 第 1、7 行中 X 在基柱上的指数
        epsilon: 辛族的型
        q: Ree 族的 q
    """
    line: int
    r: int
    d: Optional[int] = None
    q0: Optional[int] = None
    a: Optional[int] = None
    j: Optional[int] = None
    x_index: Optional[int] = None
    epsilon: Optional[str] = None
    q: Optional[int] = None


def _line2(t: Table1Instance) -> bool:
    q = t.q0 ** t.a
    if (t.d, q) in {(2, 2), (2, 3)}:
        return False
    if ((q - 1) // gcd(t.d, q - 1)) % t.r:
        return False
    if multiplicative_order(t.q0, t.r) != t.r - 1:
        return False
    return gcd(t.j, t.r - 1) == 1 and (t.a // t.j) % (t.r - 1) == 0 and t.a % t.j == 0


def _line4(t: Table1Instance) -> bool:
    q = t.q0 ** t.a
    if ((q * q - 1) // gcd(3, q + 1)) % t.r:
        return False
    if multiplicative_order(t.q0, t.r) != t.r - 1:
        return False
    return gcd(t.j, t.r - 1) == 1 and (2 * t.a) % t.j == 0 and ((2 * t.a) // t.j) % (t.r - 1) == 0


def _is_ree_q(q: Optional[int]) -> bool:
    if q is None or q <= 3:
        return False
    e = 0
    while q % 3 == 0:
        q //= 3
        e += 1
    return q == 1 and e % 2 == 1


def table1_predicate(t: Table1Instance) -> bool:
    """
    按表中该行的算术条件求值

    Raises:
        UnknownLine: 行号不在 1..10
    """
    if t.line not in LINES:
        raise UnknownLine(f"未知行号 {t.line}", {"line": t.line})
    if not _is_prime(t.r):
        return False
    if t.line == 1:
        return t.r == 3 and t.x_index == 2
    if t.line == 2:
        return _line2(t)
    if t.line == 3:
        return t.r == 2
    if t.line == 4:
        return _line4(t)
    if t.line == 5:
        return t.r == 2 and (t.d or 0) >= 3 and t.epsilon in ("+", "-")
    if t.line == 6:
        return t.r == 2 and _is_ree_q(t.q)
    if t.line == 7:
        return t.r == 2 and t.x_index == 3
    return t.r == 2


def line_of_quotient(name: str, degree: int) -> Optional[int]:
    """按商群名称与次数给出所属行（不判定是否特殊）"""
    if name is None:
        return None
    if name == "S5":
        return 1
    if name == "PSL(3,2)" and degree == 7:
        return 3
    if name == "PGammaL(2,8)" and degree == 28:
        return 7
    if name.startswith(("PSL(", "PGL(", "PSigmaL(", "PGammaL(")) or name == "M10":
        return 2
    if name.startswith(("PSU(", "PGU(", "PGammaU(")):
        return 4
    if name.startswith("Sp("):
        return 5
    if name.startswith("Ree("):
        return 6
    return {("M11", 11): 8, ("HS", 176): 9, ("Co3", 276): 10}.get((name, degree))
