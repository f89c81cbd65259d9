"""
Polinomios sobre GF(2) y GF(p)
GF(2): enteros como máscara de bits. GF(p): listas de coeficientes de menor a mayor grado.
"""

from typing import Iterator, Sequence

Poly = list[int]


# GF(2)
def gf2_degree(a: int) -> int:
    return a.bit_length() - 1


def gf2_mul(a: int, b: int) -> int:
    """Producto sin acarreo"""
    result = 0
    while b:
        if b & 1:
            result ^= a
        a <<= 1
        b >>= 1
    return result


def gf2_divmod(a: int, b: int) -> tuple[int, int]:
    if b == 0:
        raise ZeroDivisionError("división por el polinomio cero")
    db = gf2_degree(b)
    quotient = 0
    while a and gf2_degree(a) >= db:
        shift = gf2_degree(a) - db
        quotient |= 1 << shift
        a ^= b << shift
    return quotient, a


def gf2_mod(a: int, b: int) -> int:
    return gf2_divmod(a, b)[1]


def gf2_mulmod(a: int, b: int, modulus: int) -> int:
    return gf2_mod(gf2_mul(a, b), modulus)


def gf2_inverse(a: int, modulus: int) -> int:
    """Euclides extendido sobre GF(2)[x]"""
    r0, r1 = modulus, a
    s0, s1 = 0, 1
    while r1:
        q, r = gf2_divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 ^ gf2_mul(q, s1)
    if r0 != 1:
        raise ZeroDivisionError("elemento sin inverso")
    return gf2_mod(s0, modulus)


def gf2_is_irreducible(q: int) -> bool:
    """División de prueba por todos los polinomios de grado ≤ deg/2"""
    d = gf2_degree(q)
    if d < 1:
        return False
    for degree in range(1, d // 2 + 1):
        for divisor in range(1 << degree, 1 << (degree + 1)):
            if gf2_mod(q, divisor) == 0:
                return False
    return True


def find_binary_irreducible(n: int) -> int:
    """Primer polinomio irreducible de grado n en orden numérico"""
    for candidate in range(1 << n, 1 << (n + 1)):
        if gf2_is_irreducible(candidate):
            return candidate
    raise ValueError(f"sin polinomio irreducible de grado {n}")


# GF(p)
def poly_trim(a: Sequence[int]) -> Poly:
    out = list(a)
    while out and out[-1] == 0:
        out.pop()
    return out


def poly_degree(a: Sequence[int]) -> int:
    return len(poly_trim(a)) - 1


def poly_add(a: Sequence[int], b: Sequence[int], p: int) -> Poly:
    size = max(len(a), len(b))
    return poly_trim(
        ((a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0)) % p for i in range(size)
    )


def poly_scale(a: Sequence[int], c: int, p: int) -> Poly:
    return poly_trim(x * c % p for x in a)


def poly_sub(a: Sequence[int], b: Sequence[int], p: int) -> Poly:
    return poly_add(a, poly_scale(b, p - 1, p), p)


def poly_mul(a: Sequence[int], b: Sequence[int], p: int) -> Poly:
    a, b = poly_trim(a), poly_trim(b)
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return poly_trim(out)


def poly_divmod(a: Sequence[int], b: Sequence[int], p: int) -> tuple[Poly, Poly]:
    a, b = poly_trim(a), poly_trim(b)
    if not b:
        raise ZeroDivisionError("división por el polinomio cero")
    lead_inv = pow(b[-1], -1, p)
    quotient = [0] * max(len(a) - len(b) + 1, 0)
    rem = list(a)
    while len(rem) >= len(b):
        coef = rem[-1] * lead_inv % p
        shift = len(rem) - len(b)
        quotient[shift] = coef
        for i, y in enumerate(b):
            rem[shift + i] = (rem[shift + i] - coef * y) % p
        rem = poly_trim(rem)
    return poly_trim(quotient), rem


def poly_mod(a: Sequence[int], b: Sequence[int], p: int) -> Poly:
    return poly_divmod(a, b, p)[1]


def poly_xgcd(a: Sequence[int], b: Sequence[int], p: int) -> tuple[Poly, Poly, Poly]:
    """Devuelve (g, s, t) con s·a + t·b = g"""
    r0, r1 = poly_trim(a), poly_trim(b)
    s0, s1 = [1], []
    t0, t1 = [], [1]
    while r1:
        q, r = poly_divmod(r0, r1, p)
        r0, r1 = r1, r
        s0, s1 = s1, poly_sub(s0, poly_mul(q, s1, p), p)
        t0, t1 = t1, poly_sub(t0, poly_mul(q, t1, p), p)
    return r0, s0, t0


def monic_polys(p: int, degree: int) -> Iterator[Poly]:
    """Todos los polinomios mónicos de un grado, en orden de sus coeficientes bajos"""
    for index in range(p ** degree):
        coeffs = []
        for _ in range(degree):
            index, digit = divmod(index, p)
            coeffs.append(digit)
        yield coeffs + [1]


def poly_is_irreducible(q: Sequence[int], p: int) -> bool:
    d = poly_degree(q)
    if d < 1:
        return False
    for degree in range(1, d // 2 + 1):
        for divisor in monic_polys(p, degree):
            if not poly_mod(q, divisor, p):
                return False
    return True


def find_irreducible(p: int, k: int) -> tuple[int, ...]:
    """Primer polinomio mónico irreducible de grado k sobre GF(p)"""
    for candidate in monic_polys(p, k):
        if poly_is_irreducible(candidate, p):
            return tuple(candidate)
    raise ValueError(f"sin polinomio irreducible de grado {k} sobre GF({p})")
