"""Looks-right weights, labeled column-composition tableaux and the involution psi.

A labeled tableau is a pair (C, w) where C = (alpha, c) is a column-composition
tableau (c weakly increasing, jumping only at partial sums of alpha) and w is
a word with one letter per column.  A sequence of labeled tableaux carries
sign (-1)^(#bars) and weight prod q^|C_i| rho(w_i).  psi pairs off all
sequences with bars; its fixed points map bijectively (phi) onto labeled
parallelogram polyominoes, which gives two independent routes to D_{W,eta}.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Callable

from .ring import QtPoly
from .symcore import partial_sums, pr_sequences, rearrangements, compositions_of, partitions_of


class NoBar(ValueError):
    pass


class NotFixedPoint(ValueError):
    pass


class CannotJoin(ValueError):
    pass


# ------------------------------------------------------------ weights

@dataclass(frozen=True)
class LooksRightWeight:
    """rho(w) = prod_i q^(lwt(w_i, w_{i+1}) (l(w) - i)) wt(w_i).

    ``lwt(a, None)`` is the local weight of a final letter; it does not enter
    rho but is used when tableaux are joined across a block boundary.
    """

    lwt: Callable
    wt: Callable
    name: str = ""

    def local(self, w, i):
        """lwt(w, i) with 1-based i; the letter after the end is None."""
        nxt = w[i] if i < len(w) else None
        return self.lwt(w[i - 1], nxt)

    def rho_exponent(self, w):
        n = len(w)
        return sum(self.local(w, i) * (n - i) for i in range(1, n))

    def monomial(self, w):
        out = []
        for letter in w:
            out.append(self.wt(letter))
        return tuple(out)


def ascent_weight(r):
    """lwt(a, b) = #{j : a_j < b_j} on r-tuples; wt records the letter."""

    def lwt(a, b):
        if b is None:
            return 0
        return sum(1 for j in range(r) if a[j] < b[j])

    return LooksRightWeight(lwt, lambda a: tuple(a), f"ascent{r}")


def power_weight(k):
    """Letters (g, y_1..y_k): lwt(a, b) = a_0 + #{j >= 1 : a_j < b_j}."""

    def lwt(a, b):
        if b is None:
            return a[0]
        return a[0] + sum(1 for j in range(1, k + 1) if a[j] < b[j])

    return LooksRightWeight(lwt, lambda a: tuple(a[1:]), f"power{k}")


def trivial_weight():
    return LooksRightWeight(lambda a, b: 0, lambda a: (), "trivial")


def content_of(word):
    """Per-digit multisets of a word of tuples (the variable monomial)."""
    if not word:
        return ()
    r = len(word[0])
    return tuple(tuple(sorted(letter[j] for letter in word)) for j in range(r))


def rho_eval(W, w):
    """(q-exponent, content monomial) of rho(w)."""
    return W.rho_exponent(w), content_of(w)


# ----------------------------------------------------- CCT and labels

@dataclass(frozen=True)
class CCT:
    """Column-composition tableau: composition alpha and column heights c."""

    alpha: tuple
    c: tuple

    def __post_init__(self):
        if sum(self.alpha) != len(self.c):
            raise ValueError("one height per column")
        bars = partial_sums(self.alpha)
        for i in range(1, len(self.c)):
            if self.c[i] < self.c[i - 1]:
                raise ValueError("heights must weakly increase")
            if self.c[i] > self.c[i - 1] and i not in bars:
                raise ValueError("heights may only jump at a bar")

    def __len__(self):
        return len(self.c)

    @property
    def size(self):
        return sum(self.c)

    @property
    def bars(self):
        return len(self.alpha) - 1

    @property
    def shape(self):
        return tuple(sorted(self.alpha, reverse=True))


@dataclass(frozen=True)
class Labeled:
    C: CCT
    w: tuple


def seq_sign(T):
    return (-1) ** sum(S.C.bars for S in T)


def seq_weight(W, T):
    """(q-exponent, content) of a sequence of labeled tableaux."""
    e = 0
    word = []
    for S in T:
        e += S.C.size + W.rho_exponent(S.w)
        word.extend(S.w)
    return e, content_of(tuple(word))


def _lwt_sum(W, w, count):
    return sum(W.local(w, j) for j in range(1, count + 1))


def split(W, S, r=None):
    """Cut S before its first bar (or after column r) and lift the right part.

    The right part's heights rise by sum_{j <= cut} lwt(w, j), which keeps the
    total weight unchanged.
    """
    alpha, c, w = S.C.alpha, S.C.c, S.w
    if len(alpha) < 2:
        raise NoBar("tableau has no bar")
    cut = alpha[0] if r is None else r
    if r is not None and r not in partial_sums(alpha):
        raise NoBar(f"no bar after column {r}")
    d = _lwt_sum(W, w, cut)
    k = 0
    acc = 0
    while acc < cut:
        acc += alpha[k]
        k += 1
    S1 = Labeled(CCT(alpha[:k], c[:cut]), w[:cut])
    S2 = Labeled(CCT(alpha[k:], tuple(x + d for x in c[cut:])), w[cut:])
    return S1, S2


def can_join(W, S1, S2):
    w = S1.w + S2.w
    return S2.C.c[0] >= S1.C.c[-1] + _lwt_sum(W, w, len(S1.w))


def join(W, S1, S2):
    if not can_join(W, S1, S2):
        raise CannotJoin("join condition fails")
    w = S1.w + S2.w
    d = _lwt_sum(W, w, len(S1.w))
    C = CCT(S1.C.alpha + S2.C.alpha, S1.C.c + tuple(x - d for x in S2.C.c))
    return Labeled(C, w)


def psi(W, T):
    """The sign-reversing involution on sequences of labeled tableaux."""
    T = tuple(T)
    if not T:
        return T
    T1 = T[0]
    if T1.C.bars:
        S1, S2 = split(W, T1)
        return (S1, S2) + T[1:]
    if len(T) >= 2 and can_join(W, T1, T[1]):
        return (join(W, T1, T[1]),) + T[2:]
    return (T1,) + psi(W, T[1:])


def is_fixed_point(W, T):
    word = tuple(x for S in T for x in S.w)
    pos = 0
    for i, S in enumerate(T):
        if S.C.bars:
            return False
        if i + 1 < len(T):
            d = sum(W.local(word, pos + j) for j in range(1, len(S.w) + 1))
            if T[i + 1].C.c[0] >= S.C.c[-1] + d:
                return False
        pos += len(S.w)
    return bool(T) and T[0].C.c[0] == 0


# ------------------------------------------------------------ enumeration

def _height_vectors(alpha, budget, barred):
    """Block heights h_1 <= ... <= h_s with sum alpha_j h_j <= budget."""
    s = len(alpha)
    out = []

    def rec(j, lo, left, acc):
        if j == s:
            out.append(tuple(acc))
            return
        h = lo
        while alpha[j] * h <= left:
            acc.append(h)
            rec(j + 1, h, left - alpha[j] * h, acc)
            acc.pop()
            h += 1
            if barred and j == 0:
                break

    rec(0, 0, budget, [])
    return out


def _columns(alpha, hs):
    return tuple(h for a, h in zip(alpha, hs) for _ in range(a))


def _blocks(word, beta):
    out, pos = [], 0
    for b in beta:
        out.append(word[pos:pos + b])
        pos += b
    return out


def enumerate_lc(W, eta, words, max_degree):
    """All sequences in LC_{W,eta} whose weight has q-degree <= max_degree."""
    n = sum(eta)
    for beta in compositions_of(n):
        prs = pr_sequences(eta, beta)
        if not prs:
            continue
        for word in words:
            blocks = _blocks(word, beta)
            base = sum(W.rho_exponent(b) for b in blocks)
            if base > max_degree:
                continue
            for nus in prs:
                choices = [rearrangements(nu) for nu in nus]
                for alphas in itertools.product(*choices):
                    yield from _fill_heights(blocks, alphas, max_degree - base)


def _fill_heights(blocks, alphas, budget):
    r = len(blocks)
    acc = []

    def rec(i, left):
        if i == r:
            yield tuple(acc)
            return
        for hs in _height_vectors(alphas[i], left, barred=(i == 0)):
            c = _columns(alphas[i], hs)
            acc.append(Labeled(CCT(alphas[i], c), blocks[i]))
            yield from rec(i + 1, left - sum(c))
            acc.pop()

    yield from rec(0, budget)


def enumerate_bounded(W, words, max_total_height):
    """All labeled sequences (any eta) with every column height <= max_total_height."""
    for word in words:
        n = len(word)
        for beta in compositions_of(n):
            blocks = _blocks(word, beta)
            choices = [list(compositions_of(b)) for b in beta]
            for alphas in itertools.product(*choices):
                yield from _bounded_heights(blocks, alphas, max_total_height)


def _bounded_heights(blocks, alphas, hmax):
    r = len(blocks)
    acc = []

    def vecs(alpha, barred):
        s = len(alpha)
        for hs in itertools.combinations_with_replacement(range(hmax + 1), s):
            if barred and hs[0] != 0:
                continue
            yield hs

    def rec(i):
        if i == r:
            yield tuple(acc)
            return
        for hs in vecs(alphas[i], i == 0):
            acc.append(Labeled(CCT(alphas[i], _columns(alphas[i], hs)), blocks[i]))
            yield from rec(i + 1)
            acc.pop()

    yield from rec(0)


def fixed_points(W, eta, words):
    """U_{W,eta}: bar-free sequences whose consecutive parts cannot join."""
    n = sum(eta)
    for beta in rearrangements(tuple(eta)):
        for word in words:
            blocks = _blocks(word, beta)
            # lift[i] = sum of lwt over block i's positions in the global word
            lift, pos = [], 0
            for b in beta:
                lift.append(sum(W.local(word, pos + j) for j in range(1, b + 1)))
                pos += b
            acc = []

            def rec(i, prev):
                if i == len(beta):
                    yield tuple(acc)
                    return
                if i == 0:
                    choices = [0]
                else:
                    choices = range(0, prev + lift[i - 1])
                for h in choices:
                    acc.append(Labeled(CCT((beta[i],), (h,) * beta[i]), blocks[i]))
                    yield from rec(i + 1, h)
                    acc.pop()

            yield from rec(0, 0)


def signed_sum(W, eta, words, max_degree):
    """{(q-degree, content): signed count} over LC truncated at max_degree."""
    out = {}
    for T in enumerate_lc(W, eta, words, max_degree):
        key = seq_weight(W, T)
        out[key] = out.get(key, 0) + seq_sign(T)
    return {k: v for k, v in out.items() if v}


def fixed_point_sum(W, eta, words, max_degree=None):
    out = {}
    for T in fixed_points(W, eta, words):
        key = seq_weight(W, T)
        if max_degree is not None and key[0] > max_degree:
            continue
        out[key] = out.get(key, 0) + 1
    return out


# ------------------------------------------------------------ polyominoes

@dataclass(frozen=True)
class Polyomino:
    """Top path P and bottom path Q as N/E strings with common endpoints."""

    P: str
    Q: str
    word: tuple = ()
    mark: int | None = None

    @property
    def height(self):
        return self.P.count("N")

    @property
    def width(self):
        return self.P.count("E")

    def north_x(self, path):
        xs, x = [], 0
        for step in path:
            if step == "E":
                x += 1
            else:
                xs.append(x)
        return xs

    def is_valid(self):
        P, Q = self.P, self.Q
        if P.count("N") != Q.count("N") or P.count("E") != Q.count("E"):
            return False
        n, m = self.height, self.width
        if n == 0 or m == 0 or P[0] != "N" or Q[0] != "E" or P[-1] != "E" or Q[-1] != "N":
            return False
        a, b = self.north_x(P), self.north_x(Q)
        # on every inner horizontal line P must leave before Q arrives
        for i in range(1, n):
            if a[i] >= b[i - 1]:
                return False
        return a[-1] < m

    @property
    def area(self):
        a, b = self.north_x(self.P), self.north_x(self.Q)
        return sum(y - x for x, y in zip(a, b)) - (self.width + self.height - 1)

    def ascii(self):
        n, m = self.height, self.width
        a, b = self.north_x(self.P), self.north_x(self.Q)
        rows = []
        for i in reversed(range(n)):
            line = "".join("#" if a[i] <= x < b[i] else "." for x in range(m))
            lab = ""
            if self.word:
                lab = "  " + ",".join(map(str, self.word[i]))
            rows.append(line + lab)
        return "\n".join(rows)


def ncounts_to_path(xs, width):
    """N/E string from the x-positions of its north steps."""
    out, x = [], 0
    for nx in xs:
        out.append("E" * (nx - x))
        out.append("N")
        x = nx
    out.append("E" * (width - x))
    return "".join(out)


def parallelogram_polyominoes(height, width):
    """All unlabeled parallelogram polyominoes in a height x width box."""
    if height < 1 or width < 1:
        return
    for a in itertools.combinations_with_replacement(range(width), height - 1):
        xs = (0,) + a
        for b in itertools.combinations_with_replacement(range(1, width + 1), height - 1):
            ys = b + (width,)
            if all(xs[i] < ys[i - 1] for i in range(1, height)) and all(
                    x < y for x, y in zip(xs, ys)):
                poly = Polyomino(ncounts_to_path(xs, width), ncounts_to_path(ys, width))
                if poly.is_valid():
                    yield poly


def phi(W, T):
    """Fixed point -> rho-compatible labeled polyomino."""
    if not is_fixed_point(W, T):
        raise NotFixedPoint("phi is defined on fixed points only")
    word = tuple(x for S in T for x in S.w)
    n = len(word)
    steps = []
    pos = 0
    for i, S in enumerate(T):
        b = len(S.w)
        lift = sum(W.local(word, pos + j) for j in range(1, b + 1))
        nxt = T[i + 1].C.c[0] if i + 1 < len(T) else 0
        s_i = S.C.c[0] + lift - nxt
        steps.append("N" * b + "E" * s_i)
        pos += b
    P = "".join(steps) + "E"
    Q = "E" + "".join("E" * W.local(word, i) + "N" for i in range(1, n + 1))
    return Polyomino(P, Q, word)


def phi_inverse(W, poly):
    word = poly.word
    P = poly.P
    runs = []
    i = 0
    while i < len(P):
        j = i
        while j < len(P) and P[j] == "N":
            j += 1
        k = j
        while k < len(P) and P[k] == "E":
            k += 1
        runs.append((j - i, k - j))
        i = k
    beta = [r[0] for r in runs]
    s = [r[1] for r in runs]
    s[-1] -= 1
    lifts, pos = [], 0
    for b in beta:
        lifts.append(sum(W.local(word, pos + j) for j in range(1, b + 1)))
        pos += b
    heights = [0] * len(beta)
    nxt = 0
    for i in reversed(range(len(beta))):
        heights[i] = s[i] + nxt - lifts[i]
        nxt = heights[i]
    if heights[0] != 0 or any(h < 0 for h in heights):
        raise NotFixedPoint("polyomino is not in the image of phi")
    blocks = _blocks(word, beta)
    return tuple(Labeled(CCT((b,), (h,) * b), blk) for b, h, blk in zip(beta, heights, blocks))


def rho_compatible_Q(W, word):
    n = len(word)
    return "E" + "".join("E" * W.local(word, i) + "N" for i in range(1, n + 1))


def polyominoes(W, eta, words):
    """PP_{W,eta}: rho-compatible polyominoes whose N-runs have type eta."""
    target = tuple(sorted(eta, reverse=True))
    for word in words:
        n = len(word)
        Q = rho_compatible_Q(W, word)
        b = Polyomino(Q, Q).north_x(Q)
        m = Q.count("E")
        xs = [0]

        def rec(i):
            if i == n:
                runs, cnt = [], 1
                for j in range(1, n):
                    if xs[j] == xs[j - 1]:
                        cnt += 1
                    else:
                        runs.append(cnt)
                        cnt = 1
                runs.append(cnt)
                if tuple(sorted(runs, reverse=True)) == target and xs[-1] < m:
                    yield Polyomino(ncounts_to_path(xs, m), Q, word)
                return
            for x in range(xs[-1], b[i - 1]):
                xs.append(x)
                yield from rec(i + 1)
                xs.pop()

        yield from rec(1)


def D_poly(W, eta, words, route="fixed"):
    """D_{W,eta} as {content: QtPoly}, via fixed points or via polyominoes."""
    acc = {}
    if route == "fixed":
        for T in fixed_points(W, eta, words):
            e, cont = seq_weight(W, T)
            acc.setdefault(cont, {}).setdefault(e, 0)
            acc[cont][e] += 1
    elif route == "polyomino":
        for P in polyominoes(W, eta, words):
            cont = content_of(P.word)
            acc.setdefault(cont, {}).setdefault(P.area, 0)
            acc[cont][P.area] += 1
    else:
        raise ValueError(route)
    return {c: QtPoly({(e, 0, 0): v for e, v in d.items()}) for c, d in acc.items()}


# ------------------------------------------------------------ words

def words_with_content(contents):
    """All words of tuples whose j-th digit column rearranges contents[j]."""
    from .macdonald import _multiset_perms
    cols = [list(_multiset_perms(tuple(c))) for c in contents]
    for combo in itertools.product(*cols):
        yield tuple(zip(*combo))


def content_vector(lam):
    """Multiset with value v repeated lam_v times."""
    return tuple(v for v, mult in enumerate(lam, start=1) for _ in range(mult))


# ------------------------------------------------------------ forgotten basis

def cct_generating(mu, order, barred=False):
    """sum over column-composition tableaux of type mu of q^|C|, up to q^order."""
    out = {}
    for alpha in rearrangements(tuple(mu)):
        for hs in _height_vectors(alpha, order, barred):
            e = sum(a * h for a, h in zip(alpha, hs))
            out[e] = out.get(e, 0) + 1
    return out


def render_sequence(T):
    """ASCII picture: one row per unit of height, bars between blocks."""
    pieces = []
    for S in T:
        cols = []
        k = 0
        for a in S.C.alpha:
            cols.append(" ".join(str(S.C.c[k + j]) for j in range(a)))
            k += a
        labels = " ".join("".join(map(str, x)) for x in S.w)
        pieces.append("[" + " | ".join(cols) + "] " + labels)
    return "  ".join(pieces)
