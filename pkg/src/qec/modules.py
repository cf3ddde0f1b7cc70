"""Finitely generated modules over the quantum torus, all free over K[z,z^-1].

A module is presented one of four ways:

  LineBundle(c, m)   rank-1 free module with s(e) = c z^m e
  Torsion(blocks)    constant Jordan action: s(z^n x) = q^n z^n J x
  Good(p)            cyclic quotient by a sigma-good element p
  MatrixModule(T)    free module A^n with semilinear s(v) = T(z) v(qz)

Every presentation converts to a SigmaMatrix (an invertible matrix over
K[z,z^-1], i.e. unit determinant) and the semilinear rule above.  Duals use
the inverse transpose, tensor products the Kronecker product; structured
inputs keep structured outputs where a closed form exists so that S-ranks
stay exact.
"""

from __future__ import annotations

from fractions import Fraction

from . import aq
from .aq import AqElement, degrees, good_normal_coeffs
from .errors import PreconditionViolation, ZeroInput
from .laurent import ONE, ZERO, LaurentMatrix, LaurentPoly, det_and_inverse, qshift
from .linalg import jordan_structure_constant
from .scalars import Scalar, get_q, q_power_class, scalar_from_str, scalar_to_str


class Unknown:
    """A value the artifact could not certify; may carry an upper bound."""

    __slots__ = ("upper_bound",)

    def __init__(self, upper_bound=None):
        self.upper_bound = upper_bound

    def __eq__(self, other):
        return isinstance(other, Unknown) and self.upper_bound == other.upper_bound

    def __repr__(self):
        if self.upper_bound is None:
            return "Unknown()"
        return f"Unknown(upper_bound={self.upper_bound})"


class SigmaMatrix:
    """Invertible square matrix over K[z,z^-1] defining s(v) = T(z) v(qz)."""

    __slots__ = ("mat", "det", "_inv", "_cyclic_cache")

    def __init__(self, mat, _det=None):
        if not isinstance(mat, LaurentMatrix):
            mat = LaurentMatrix(mat)
        self.mat = mat
        if _det is None:
            from .laurent import det as _laurent_det

            _det = _laurent_det(mat)
        if _det.is_zero() or not _det.is_unit():
            raise PreconditionViolation(
                f"matrix determinant {_det} is not a unit of K[z,z^-1]"
            )
        self.det = _det
        self._inv = None
        self._cyclic_cache = {}

    @property
    def n(self):
        return self.mat.n

    def inverse(self) -> LaurentMatrix:
        if self._inv is None:
            _, inv = det_and_inverse(self.mat)
            assert inv is not None
            self._inv = inv
        return self._inv

    def __eq__(self, other):
        return isinstance(other, SigmaMatrix) and self.mat == other.mat

    def __repr__(self):
        return f"SigmaMatrix({self.mat!r})"


# -- module element plumbing -------------------------------------------------


def sigma_apply(T: SigmaMatrix, vec, k: int = 1):
    """Apply s^k to a coordinate vector over A (list of LaurentPoly)."""
    vec = list(vec)
    if k >= 0:
        for _ in range(k):
            vec = T.mat.apply([qshift(f, 1) for f in vec])
    else:
        inv = T.inverse()
        for _ in range(-k):
            shifted = inv.qshift(-1)
            vec = shifted.apply([qshift(f, -1) for f in vec])
    return vec


def aq_act(x: AqElement, T: SigmaMatrix, vec):
    """Act by an algebra element on a coordinate vector: sum x_i(z) s^i(v)."""
    out = [ZERO] * T.n
    for i, f in x.terms():
        moved = sigma_apply(T, vec, i)
        for r in range(T.n):
            out[r] = out[r] + f * moved[r]
    return out


# -- presentations -------------------------------------------------------------


class LineBundle:
    __slots__ = ("c", "m")

    def __init__(self, c, m):
        c = Fraction(c)
        if c == 0:
            raise ZeroInput("line bundle scalar must be nonzero")
        self.c = c
        self.m = int(m)

    def __eq__(self, other):
        return isinstance(other, LineBundle) and (self.c, self.m) == (other.c, other.m)

    def __hash__(self):
        return hash((self.c, self.m))

    def __repr__(self):
        return f"LineBundle({scalar_to_str(self.c)}, {self.m})"


class Torsion:
    """theta of a finite-dimensional sigma-space, by Jordan data.

    blocks: tuple of (eigenvalue, size), eigenvalues nonzero, stored sorted by
    (eigenvalue, size descending).
    """

    __slots__ = ("blocks",)

    def __init__(self, blocks):
        blist = []
        for lam, size in blocks:
            lam = Fraction(lam)
            size = int(size)
            if lam == 0:
                raise ZeroInput("torsion eigenvalues must be nonzero")
            if size < 1:
                raise PreconditionViolation("block sizes are positive")
            blist.append((lam, size))
        if not blist:
            raise PreconditionViolation("torsion module needs at least one block")
        self.blocks = tuple(sorted(blist, key=lambda b: (b[0], -b[1])))

    @property
    def dim(self):
        return sum(size for _, size in self.blocks)

    def __eq__(self, other):
        return isinstance(other, Torsion) and self.blocks == other.blocks

    def __hash__(self):
        return hash(self.blocks)

    def __repr__(self):
        return f"Torsion({list(self.blocks)})"


class Good:
    """Cyclic module A_q / A_q p for sigma-good p of positive width."""

    __slots__ = ("p",)

    def __init__(self, p: AqElement):
        d = degrees(p)
        if d is None:
            raise ZeroInput("good presentation needs a nonzero element")
        if not d.sigma_good:
            raise PreconditionViolation("element is not sigma-good")
        if d.deg_sigma < 1:
            raise PreconditionViolation("unit generator gives the zero module")
        self.p = p

    def __eq__(self, other):
        return isinstance(other, Good) and self.p == other.p

    def __hash__(self):
        return hash(self.p)

    def __repr__(self):
        return f"Good({self.p})"


class MatrixModule:
    __slots__ = ("T",)

    def __init__(self, T):
        if not isinstance(T, SigmaMatrix):
            T = SigmaMatrix(T)
        self.T = T

    def __eq__(self, other):
        return isinstance(other, MatrixModule) and self.T == other.T

    def __repr__(self):
        return f"MatrixModule({self.T.mat!r})"


# any of the four classes
ModulePresentation = (LineBundle, Torsion, Good, MatrixModule)


def extension_fixture() -> MatrixModule:
    """The 2x2 upper-triangular [[z,1],[0,1]]: a non-split extension of the
    trivial module by the degree-one line bundle, carrying a z-eigenvector."""
    z = LaurentPoly.monomial(1, 1)
    return MatrixModule(LaurentMatrix(((z, ONE), (ZERO, ONE))))


def _jordan_matrix(blocks) -> LaurentMatrix:
    n = sum(size for _, size in blocks)
    rows = [[ZERO] * n for _ in range(n)]
    at = 0
    for lam, size in blocks:
        for i in range(size):
            rows[at + i][at + i] = LaurentPoly.const(lam)
            if i + 1 < size:
                rows[at + i][at + i + 1] = ONE
        at += size
    return LaurentMatrix(tuple(tuple(row) for row in rows))


def to_matrix(M) -> SigmaMatrix:
    """The defining matrix of any presentation (companion form for Good)."""
    if isinstance(M, SigmaMatrix):
        return M
    if isinstance(M, MatrixModule):
        return M.T
    if isinstance(M, LineBundle):
        return SigmaMatrix(
            LaurentMatrix(((LaurentPoly.monomial(M.c, M.m),),)),
            _det=LaurentPoly.monomial(M.c, M.m),
        )
    if isinstance(M, Torsion):
        return SigmaMatrix(_jordan_matrix(M.blocks))
    if isinstance(M, Good):
        _, coeffs = good_normal_coeffs(M.p)
        t = len(coeffs)
        rows = [[ZERO] * t for _ in range(t)]
        for j in range(t - 1):
            rows[j + 1][j] = ONE
        for i in range(t):
            rows[i][t - 1] = -coeffs[i]
        return SigmaMatrix(LaurentMatrix(tuple(tuple(r) for r in rows)))
    raise TypeError(f"not a module presentation: {M!r}")


def rank_A(M) -> int:
    """Rank over K[z,z^-1] (minimal s-width of the defining ideal)."""
    if isinstance(M, LineBundle):
        return 1
    if isinstance(M, Torsion):
        return M.dim
    if isinstance(M, Good):
        return degrees(M.p).deg_sigma
    if isinstance(M, MatrixModule):
        return M.T.n
    raise TypeError(f"not a module presentation: {M!r}")


def rank_S(M, bounds=None):
    """Rank over K[s,s^-1]: exact for structured presentations (minimal
    z-width of the defining ideal), search-certified or Unknown for matrices."""
    if isinstance(M, LineBundle):
        return abs(M.m)
    if isinstance(M, Torsion):
        return 0
    if isinstance(M, Good):
        return degrees(M.p).deg_z
    if isinstance(M, MatrixModule):
        from .ideals import cyclic_search

        found = cyclic_search(M.T, bounds)
        if found is None:
            return Unknown()
        if found.certified:
            return found.rank_S_upper
        return Unknown(found.rank_S_upper)
    raise TypeError(f"not a module presentation: {M!r}")


# -- tensor, dual, hom ---------------------------------------------------------


def _line_twist(p: AqElement, c, m) -> AqElement:
    """Image of p under the automorphism z |-> z, s |-> c z^m s (it preserves
    the defining relation).  Twisting the s-action of A_q/A_q p by a line
    bundle pulls the annihilator back along the inverse automorphism."""
    twist = AqElement.monomial(c, m, 1)
    out = AqElement.zero()
    for i, f in p.terms():
        out = out + AqElement.from_laurent(f) * twist**i
    return out


def tensor(M, N):
    """M (x) N with s acting diagonally; structured inputs stay structured
    when a closed form exists, otherwise the Kronecker matrix is returned."""
    if isinstance(M, LineBundle) and isinstance(N, LineBundle):
        return LineBundle(M.c * N.c, M.m + N.m)
    if isinstance(M, Torsion) and isinstance(N, Torsion):
        jm = _jordan_matrix(M.blocks)
        jn = _jordan_matrix(N.blocks)
        kron = jm.kron(jn)
        rows = [[e.coeff(0) for e in row] for row in kron.rows]
        return Torsion(jordan_structure_constant(rows))
    if isinstance(M, Good) and isinstance(N, LineBundle):
        return Good(_line_twist(M.p, 1 / N.c, -N.m))
    if isinstance(M, LineBundle) and isinstance(N, Good):
        return Good(_line_twist(N.p, 1 / M.c, -M.m))
    tm, tn = to_matrix(M), to_matrix(N)
    d = tm.det**tn.n * tn.det**tm.n
    return MatrixModule(SigmaMatrix(tm.mat.kron(tn.mat), _det=d))


def dual(M):
    """Internal dual: inverse-transpose matrix; closed forms for structured
    presentations (line scalars invert, torsion eigenvalues invert, good
    generators pass through the duality formula)."""
    if isinstance(M, LineBundle):
        return LineBundle(1 / M.c, -M.m)
    if isinstance(M, Torsion):
        return Torsion(tuple((1 / lam, size) for lam, size in M.blocks))
    if isinstance(M, Good):
        from .duality import good_dual

        _, dual_mod = good_dual(M.p)
        return dual_mod
    T = to_matrix(M)
    inv = T.inverse()
    return MatrixModule(SigmaMatrix(inv.transpose(), _det=T.det.inverse_unit()))


def hom(M, N):
    """Internal hom = dual(M) (x) N."""
    return tensor(dual(M), N)


# -- Picard group --------------------------------------------------------------


class PicClass:
    """Class of a line bundle in (K*/q^Z) x Z, stored by canonical orbit
    representative (absolute value in [1, Q) for Q = max(|q|, 1/|q|))."""

    __slots__ = ("c", "m")

    def __init__(self, c, m):
        c = Fraction(c)
        if c == 0:
            raise ZeroInput("pic scalar must be nonzero")
        q = get_q()
        step = q if abs(q) > 1 else 1 / q
        big = abs(step)
        while abs(c) >= big:
            c /= step
        while abs(c) < 1:
            c *= step
        self.c = c
        self.m = int(m)

    def __eq__(self, other):
        return isinstance(other, PicClass) and (self.c, self.m) == (other.c, other.m)

    def __hash__(self):
        return hash((self.c, self.m))

    def __repr__(self):
        return f"PicClass({scalar_to_str(self.c)}, {self.m})"


def pic_class(L) -> PicClass:
    if isinstance(L, PicClass):
        return L
    if isinstance(L, LineBundle):
        return PicClass(L.c, L.m)
    raise TypeError(f"no pic class for {L!r}")


def pic_mul(a, b) -> PicClass:
    a, b = pic_class(a), pic_class(b)
    return PicClass(a.c * b.c, a.m + b.m)


def pic_inv(a) -> PicClass:
    a = pic_class(a)
    return PicClass(1 / a.c, -a.m)


def pic_eq(a, b) -> bool:
    a, b = pic_class(a), pic_class(b)
    if a.m != b.m:
        return False
    # canonical representatives agree iff the ratio is a q-power
    same = a.c == b.c
    assert same == (q_power_class(a.c / b.c) is not None)
    return same


def pic_trivial(a) -> bool:
    """Whether a line bundle (or class) is trivial in Pic."""
    return pic_eq(pic_class(a), PicClass(1, 0))


# -- Jordan data ---------------------------------------------------------------


def jordan_structure(T):
    """Jordan blocks of a constant invertible matrix (NonSplitSpectrum when
    the spectrum is not rational)."""
    if isinstance(T, Torsion):
        return list(T.blocks)
    mat = T.mat if isinstance(T, SigmaMatrix) else T
    if isinstance(mat, LaurentMatrix):
        rows = []
        for row in mat.rows:
            out = []
            for e in row:
                if not e.is_zero() and (e.bot != 0 or e.top != 0):
                    raise PreconditionViolation("jordan data needs a constant matrix")
                out.append(e.coeff(0))
            rows.append(out)
    else:
        rows = [[Fraction(e) for e in row] for row in mat]
    return jordan_structure_constant(rows)


def torsion_tensor_rank_check(N, M, bounds=None):
    """(lhs, rhs) for the product rank law with M torsion: lhs is the
    search-certified S-rank of the Kronecker matrix module, rhs the closed
    form rank_S(N) * rank_A(M)."""
    if not isinstance(M, Torsion):
        raise PreconditionViolation("M must be torsion")
    tm, tn = to_matrix(N), to_matrix(M)
    d = tm.det**tn.n * tn.det**tm.n
    kron = MatrixModule(SigmaMatrix(tm.mat.kron(tn.mat), _det=d))
    lhs = rank_S(kron, bounds)
    rhs_rank = rank_S(N)
    if isinstance(rhs_rank, Unknown):
        raise PreconditionViolation("rank_S(N) must be exact for the check")
    return lhs, rhs_rank * rank_A(M)


# -- rigidity ------------------------------------------------------------------


def ev_pairing(fvec, mvec):
    """Evaluation pairing on coordinates: <f, m> = sum f_i m_i in A."""
    return sum((f * m for f, m in zip(fvec, mvec)), ZERO)


def rigidity_check(M) -> bool:
    """Exact rigidity of the dual pairing for a module presentation:
    the coevaluation element is s-invariant, ev is s-equivariant, and
    (ev (x) id) o (id (x) coev) is the identity on coordinates."""
    T = to_matrix(M)
    n = T.n
    S = SigmaMatrix(T.inverse().transpose(), _det=T.det.inverse_unit())
    # 1. matrix identity behind equivariance: S^t T = (T T^-1)^t = I
    if S.mat.transpose() * T.mat != LaurentMatrix.identity(n):
        return False
    # 2. coev = sum e^i (x) e_i is fixed: (S (x) T) vec(I)(qz) = vec(I)
    coev = [ONE if i == k else ZERO for i in range(n) for k in range(n)]
    moved = S.mat.kron(T.mat).apply([qshift(f, 1) for f in coev])
    if moved != coev:
        return False
    # 3. ev equivariance on a deterministic sample
    z = LaurentPoly.monomial(1, 1)
    fvec = [LaurentPoly.const(1) + z * (i + 1) for i in range(n)]
    mvec = [z ** (i % 3) + LaurentPoly.const(i) for i in range(n)]
    sf = S.mat.apply([qshift(f, 1) for f in fvec])
    sm = T.mat.apply([qshift(m, 1) for m in mvec])
    if ev_pairing(sf, sm) != qshift(ev_pairing(fvec, mvec), 1):
        return False
    # 4. the zig-zag on each basis vector of M
    for j in range(n):
        # id (x) coev: e_j |-> coordinates x[(j', (i,k))] = delta_{j j'} coev
        # ev' (x) id collapses (j', i) by the pairing delta_{j' i}
        out = [ZERO] * n
        for k in range(n):
            for i in range(n):
                # x[(i, (i, k))] = coev[(i, k)]
                out[k] = out[k] + (ONE if i == j else ZERO) * coev[i * n + k]
        expect = [ONE if k == j else ZERO for k in range(n)]
        if out != expect:
            return False
    return True


# -- JSON descriptors ----------------------------------------------------------


def module_to_json(M) -> dict:
    if isinstance(M, LineBundle):
        return {"kind": "line", "c": scalar_to_str(M.c), "m": M.m}
    if isinstance(M, Torsion):
        return {
            "kind": "torsion",
            "blocks": [
                {"lambda": scalar_to_str(lam), "size": size}
                for lam, size in M.blocks
            ],
        }
    if isinstance(M, Good):
        return {"kind": "good", "p": aq.to_str(M.p)}
    if isinstance(M, MatrixModule):
        return {"kind": "matrix", "entries": M.T.mat.to_strs()}
    raise TypeError(f"not a module presentation: {M!r}")


def module_from_json(desc: dict):
    kind = desc.get("kind")
    if kind == "line":
        return LineBundle(scalar_from_str(desc["c"]), desc["m"])
    if kind == "torsion":
        return Torsion(
            [(scalar_from_str(b["lambda"]), b["size"]) for b in desc["blocks"]]
        )
    if kind == "good":
        return Good(aq.parse(desc["p"]))
    if kind == "matrix":
        return MatrixModule(SigmaMatrix(LaurentMatrix.from_strs(desc["entries"])))
    raise PreconditionViolation(f"unknown module kind: {kind!r}")
