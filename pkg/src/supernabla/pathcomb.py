"""Lattice-path combinatorics: word statistics, multi-labeled Dyck paths,
marked-return polyominoes, square paths, the zeta map and descent counts.

Paths are N/E step strings.  A multi-labeled Dyck path of size (n, k) is
stored through its north-step columns col(1..n), with col(1) = 0 and
col(i) <= k(i-1), together with a word of r-tuples (one tuple per north step,
bottom to top).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .symcore import EmptyPartition, composition_from_set, rearrangements
from .weights import Polyomino, ncounts_to_path, words_with_content, content_of


class EmptyGamma(ValueError):
    pass


class NotLattice:
    """Returned (not raised) by lattice_type for non-lattice words."""

    def __repr__(self):
        return "NotLattice"

    def __bool__(self):
        return False


NOT_LATTICE = NotLattice()


# ------------------------------------------------------------ word statistics

def descents(a):
    return {i for i in range(1, len(a)) if a[i - 1] > a[i]}


def ascents(a):
    return {i for i in range(1, len(a)) if a[i - 1] < a[i]}


def word_stats(a, mode):
    """Des, Asc (1-based position sets) or maj, comaj, revmaj, revcomaj."""
    n = len(a)
    if mode == "Des":
        return descents(a)
    if mode == "Asc":
        return ascents(a)
    if mode == "maj":
        return sum(descents(a))
    if mode == "comaj":
        return sum(n - i for i in descents(a))
    if mode == "revmaj":
        return sum(n - i for i in ascents(a))
    if mode == "revcomaj":
        return sum(ascents(a))
    raise ValueError(f"unknown statistic {mode!r}")


def revmaj_alpha(b, alpha):
    """revmaj summed over the blocks of b cut by the composition alpha."""
    out, pos = 0, 0
    for a in alpha:
        out += word_stats(b[pos:pos + a], "revmaj")
        pos += a
    return out


def lattice_type(a):
    """Content partition of a lattice word, else NOT_LATTICE."""
    counts = {}
    for x in a:
        if x < 1:
            return NOT_LATTICE
        counts[x] = counts.get(x, 0) + 1
        if x > 1 and counts[x] > counts.get(x - 1, 0):
            return NOT_LATTICE
    return tuple(counts[v] for v in range(1, len(counts) + 1))


def is_lattice(a):
    return lattice_type(a) is not NOT_LATTICE


def wdes(word, i):
    """#{j : w_ij >= w_{i+1,j}} with 1-based i; past the end every digit counts."""
    a = word[i - 1]
    if i >= len(word):
        return len(a)
    b = word[i]
    return sum(1 for x, y in zip(a, b) if x >= y)


# ------------------------------------------------------ multi-labeled paths

@dataclass(frozen=True)
class MultiLabeledDyckPath:
    n: int
    k: int
    cols: tuple
    word: tuple

    @property
    def r(self):
        return len(self.word[0]) if self.word else 0

    @property
    def steps(self):
        return ncounts_to_path(self.cols, self.k * self.n)

    @property
    def area(self):
        return sum(self.k * i - c for i, c in enumerate(self.cols))

    @property
    def content(self):
        return content_of(self.word)

    def eta(self):
        return eta_comp(self)

    def is_valid(self):
        n, k, c, w = self.n, self.k, self.cols, self.word
        if len(c) != n or len(w) != n or c[0] != 0:
            return False
        for i in range(n):
            if c[i] > k * i:
                return False
            if i + 1 < n and c[i + 1] - c[i] < wdes(w, i + 1):
                return False
        return True

    def serialize(self):
        rows = [",".join(str(d) for d in letter) for letter in self.word]
        return self.steps + " " + ";".join(rows)

    def ascii(self):
        lines = []
        for i in reversed(range(self.n)):
            row = ["."] * (self.k * self.n)
            row[self.cols[i]:self.k * i] = ["#"] * (self.k * i - self.cols[i])
            lines.append("".join(row) + "  " + ",".join(map(str, self.word[i])))
        return "\n".join(lines)


def _paths_for_word(n, k, word):
    """Column vectors compatible with a fixed word."""
    cols = [0]

    def rec(i):
        if i == n:
            yield tuple(cols)
            return
        lo = cols[-1] + wdes(word, i)
        for c in range(lo, k * i + 1):
            cols.append(c)
            yield from rec(i + 1)
            cols.pop()

    yield from rec(1)


def enumerate_mld(n, k, r, contents, lattice=None):
    """Multi-labeled Dyck paths with given per-digit contents.

    ``contents[j]`` is the multiset of digit-j labels (a tuple of integers or a
    partition via content_vector).  ``lattice[j]`` true keeps only words whose
    digit j is a lattice word.
    """
    if n < 1 or k < 1 or r < 1:
        raise ValueError("n, k, r must be positive")
    if len(contents) != r:
        raise ValueError("one content per digit")
    lattice = tuple(lattice) if lattice else (False,) * r
    for word in words_with_content(contents):
        if any(flag and not is_lattice(tuple(l[j] for l in word)) for j, flag in enumerate(lattice)):
            continue
        for cols in _paths_for_word(n, k, word):
            yield MultiLabeledDyckPath(n, k, cols, word)


def eta_comp(p):
    S = {i for i in range(1, p.n) if wdes(p.word, i) < p.cols[i] - p.cols[i - 1]}
    return composition_from_set(S, p.n)


def iota(p):
    """Drop descent-count east steps; lands on a rho-compatible polyomino."""
    if p.r > p.k:
        raise ValueError("iota needs r <= k")
    n, k, w = p.n, p.k, p.word
    removed, xs = 0, []
    for i in range(1, n + 1):
        xs.append(p.cols[i - 1] - removed)
        removed += wdes(w, i)
    Q = "E" + "".join("E" * (k - wdes(w, i)) + "N" for i in range(1, n + 1))
    width = Q.count("E")
    return Polyomino(ncounts_to_path(xs, width), Q, w)


def iota_inverse(poly, k):
    w = poly.word
    n = len(w)
    xs = poly.north_x(poly.P)
    cols, added = [], 0
    for i in range(1, n + 1):
        cols.append(xs[i - 1] + added)
        added += wdes(w, i)
    p = MultiLabeledDyckPath(n, k, tuple(cols), w)
    if not p.is_valid():
        raise ValueError("polyomino is not in the image of iota")
    return p


# ------------------------------------------------------------ SR and Newton

def sr_enumerate(mu):
    """Selected rearrangements: (alpha, marked cell in alpha_1)."""
    mu = tuple(mu)
    if not mu or sum(mu) == 0:
        raise EmptyPartition("SR needs a nonempty partition")
    return [(alpha, j) for alpha in rearrangements(mu) for j in range(1, alpha[0] + 1)]


def sr_count(mu):
    return len(sr_enumerate(mu))


# ------------------------------------------------------------ marked returns

@dataclass(frozen=True)
class MarkedReturnPath:
    P: str
    Q: str
    word: tuple
    mark: int
    ret: int = field(compare=False)

    @property
    def polyomino(self):
        return Polyomino(self.P, self.Q, self.word, self.mark)

    @property
    def area(self):
        return self.polyomino.area

    @property
    def n(self):
        return self.P.count("N")


def _run_lengths(xs):
    runs, cnt = [], 1
    for j in range(1, len(xs)):
        if xs[j] == xs[j - 1]:
            cnt += 1
        else:
            runs.append(cnt)
            cnt = 1
    runs.append(cnt)
    return runs


def _wdes0(word, i):
    """Non-ascent count between letters i and i+1, read cyclically at i = n.

    Letters may be empty (k = 0), giving 0.
    """
    a = word[i - 1]
    b = word[i % len(word)]
    return sum(1 for x, y in zip(a, b) if x >= y)


def marked_eta(mp):
    """i is a break of eta iff the east run after north step i exceeds its descent count."""
    xs = mp.polyomino.north_x(mp.P)
    n = len(xs)
    S = {i for i in range(1, n) if _wdes0(mp.word, i) < xs[i] - xs[i - 1]}
    return composition_from_set(S, n)


def enumerate_marked(n, k, gamma, contents=None, lattice=None):
    """Marked-return multi-labeled paths with bottom path a (gamma, k^n)-staircase.

    ``contents`` gives the k label multisets (omit for k = 0).  The last
    letter is compared with the first one, so the final east run of P has at
    least 2 + #{j : w_nj >= w_1j} steps.  The return is measured from the end
    of the first part of eta, i.e. the first north run once the descent-forced
    east steps are taken out.
    """
    gamma = tuple(x for x in gamma if x)
    if not gamma:
        raise EmptyGamma("gamma must be nonempty")
    if len(gamma) > n:
        return
    contents = tuple(contents or ())
    if len(contents) != k:
        raise ValueError("one content per label digit")
    if k:
        words = list(words_with_content(contents))
        if lattice:
            words = [w for w in words
                     if all(not f or is_lattice(tuple(l[j] for l in w)) for j, f in enumerate(lattice))]
    else:
        words = [((),) * n]
    for g in rearrangements(gamma + (0,) * (n - len(gamma))):
        Q = "E" + "".join("E" * (k + gi) + "N" for gi in g)
        width = Q.count("E")
        b = Polyomino(Q, Q).north_x(Q)
        for word in words:
            forced = [_wdes0(word, i) for i in range(1, n + 1)]
            xs = [0]

            def rec(i):
                if i == n:
                    if width - xs[-1] >= 2 + forced[-1]:
                        yield tuple(xs)
                    return
                for x in range(xs[-1] + forced[i - 1], b[i - 1]):
                    xs.append(x)
                    yield from rec(i + 1)
                    xs.pop()

            for cols in rec(1):
                P = ncounts_to_path(cols, width)
                first = next((i for i in range(1, n) if cols[i] - cols[i - 1] > forced[i - 1]), n)
                ext = list(cols) + [width]
                ret = next(i for i in range(first, n + 1) if b[i - 1] - ext[i] <= 1)
                for mark in range(1, ret + 1):
                    yield MarkedReturnPath(P, Q, word, mark, ret)


# ------------------------------------------------------------ Dyck paths

def dyck_paths(n):
    """Classical Dyck paths from (0,0) to (n,n) weakly above the diagonal."""
    out = []

    def rec(s, north, east):
        if north == n and east == n:
            out.append(s)
            return
        if north < n:
            rec(s + "N", north + 1, east)
        if east < north:
            rec(s + "E", north, east + 1)

    rec("", 0, 0)
    return out


def area_sequence(D):
    seq, x, i = [], 0, 0
    for step in D:
        if step == "E":
            x += 1
        else:
            seq.append(i - x)
            i += 1
    return tuple(seq)


def dyck_area(D):
    return sum(area_sequence(D))


def dinv(D):
    a = area_sequence(D)
    return sum(1 for i in range(len(a)) for j in range(i + 1, len(a))
               if a[i] == a[j] or a[i] == a[j] + 1)


def bounce(D):
    """Bounce statistic from the bounce path started at (0,0)."""
    n = D.count("N")
    # height at which D takes its (x+1)-th east step
    east_height, y = [], 0
    for step in D:
        if step == "N":
            y += 1
        else:
            east_height.append(y)
    total, j = 0, 0
    while True:
        j = east_height[j]
        if j == n:
            return total
        total += n - j


def zeta(D):
    a = area_sequence(D)
    out = []
    for v in range(0, max(a) + 2):
        for x in a:
            if x == v:
                out.append("N")
            elif x == v - 1:
                out.append("E")
    return "".join(out)


def riser(D):
    """Lengths of the maximal north runs, bottom to top."""
    runs, cur = [], 0
    for step in D:
        if step == "N":
            cur += 1
        elif cur:
            runs.append(cur)
            cur = 0
    if cur:
        runs.append(cur)
    return tuple(runs)


# ------------------------------------------------------------ square paths

def square_paths(n):
    """N/E paths from (0,0) to (n,n) ending with an east step."""
    out = []
    for pos in itertools.combinations(range(2 * n - 1), n):
        s = ["E"] * (2 * n)
        for p in pos:
            s[p] = "N"
        out.append("".join(s))
    return out


def square_area(S):
    a = area_sequence(S)
    m = min(a)
    return sum(x - m for x in a)


def _heights(S):
    h, out = 0, []
    for step in S:
        out.append(h)
        h += 1 if step == "N" else -1
    return out


def first_return(D):
    h = 0
    for i, step in enumerate(D):
        h += 1 if step == "N" else -1
        if h == 0:
            return D[:i + 1].count("N")
    raise ValueError("not a Dyck path")


def square_to_marked(S):
    """Square path ending in E -> (Dyck path, mark) by a circular shift.

    The cut sits at the last lowest point of S; the mark is the index of the
    east step of the first prime component that ends the moved piece.
    """
    hs = _heights(S)
    lo = min(hs)
    p = max(i for i, h in enumerate(hs) if h == lo)
    A, B = S[p:], S[:p]
    D = A + B
    return D, A.count("E")


def marked_to_square(D, mark):
    ret = first_return(D)
    if not 1 <= mark <= ret:
        raise ValueError("mark out of range")
    seen = 0
    for i, step in enumerate(D):
        if step == "E":
            seen += 1
            if seen == mark:
                return D[i + 1:] + D[:i + 1]
    raise ValueError("mark out of range")


def marked_to_polyomino(D, mark):
    """The k = 0, gamma = 1^n marked-return polyomino of a Dyck path."""
    n = D.count("N")
    P = D + "E"
    Q = "E" + "EN" * n
    return MarkedReturnPath(P, Q, ((),) * n, mark, first_return(D))


# ---------------------------------------------------- common descents at q=0

def _descent_mask(perm):
    m = 0
    for i in range(len(perm) - 1):
        if perm[i] > perm[i + 1]:
            m |= 1 << i
    return m


def perm_no_common_descent(n, k):
    """#(k+1)-tuples of permutations of n with no position a descent in all."""
    if n < 1 or k < 0:
        raise ValueError("need n >= 1, k >= 0")
    counts = {}
    for perm in itertools.permutations(range(n)):
        mk = _descent_mask(perm)
        counts[mk] = counts.get(mk, 0) + 1
    masks = list(counts.items())
    full = (1 << (n - 1)) - 1
    total = 0
    for combo in itertools.product(masks, repeat=k + 1):
        acc, mult = full, 1
        for mk, c in combo:
            acc &= mk
            mult *= c
        if acc == 0:
            total += mult
    return total
