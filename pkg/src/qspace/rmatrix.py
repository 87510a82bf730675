"""Vector-representation braid matrices and their structural checks.

An ``RMatrix`` holds the entries R^{kl}_{mn} of the braiding on the
coordinate module, keyed by generator names, together with the constant that
calibrates the mixed momentum-coordinate rewrite rule.  Tables ship for the
quantum plane and for the three-dimensional Euclidean space; anything else
can be supplied through a config file (see ``load_rmatrix``).

Nothing in the package treats these tables as ground truth: the braid
relation, invertibility, the q->1 flip limit and the rewrite-rule
consistency checks all run against them in the test suite.
"""

from __future__ import annotations

import json
import os

from .scalar import LAMBDA, LAMBDA_PLUS, ONE, QScalar, qpow, rational
from .spaces import EUCLID3, QUANTUM_PLANE, config_dir

# entry key: (k, l, m, n) generator names; value of R(v_m ox v_n) on v_k ox v_l
Entries = dict[tuple[str, str, str, str], QScalar]


class RMatrix:
    def __init__(self, space_name: str, labels: tuple[str, ...], entries: Entries,
                 constant_k: QScalar):
        self.space_name = space_name
        self.labels = labels
        known = set(labels)
        for key in entries:
            if any(x not in known for x in key):
                raise ValueError("entry %r uses labels outside the declared dimension" % (key,))
        self.entries = {k: v for k, v in entries.items() if not v.is_zero()}
        self.constant_k = constant_k
        self._inverse: Entries | None = None

    def dimension(self) -> int:
        return len(self.labels)

    def entry(self, k: str, l: str, m: str, n: str) -> QScalar:
        return self.entries.get((k, l, m, n), QScalar.zero())

    def inverse_entries(self) -> Entries:
        if self._inverse is None:
            self._inverse = _invert(self.labels, self.entries)
        return self._inverse

    # -- structural checks -------------------------------------------------

    def check_inverse(self) -> bool:
        return _compose(self.labels, self.entries, self.inverse_entries()) == _identity(self.labels)

    def check_braid(self) -> bool:
        """R12 R23 R12 = R23 R12 R23 on the triple tensor power, exactly."""
        r12 = _embed(self.labels, self.entries, left=True)
        r23 = _embed(self.labels, self.entries, left=False)
        lhs = _compose3(self.labels, r12, _compose3(self.labels, r23, r12))
        rhs = _compose3(self.labels, r23, _compose3(self.labels, r12, r23))
        return lhs == rhs

    def check_flip_limit(self, tol: float = 1e-12) -> bool:
        """At q=1 the matrix degenerates to the flip permutation."""
        for m in self.labels:
            for n in self.labels:
                for k in self.labels:
                    for l in self.labels:
                        v = self.entry(k, l, m, n).evaluate(1.0)
                        want = 1.0 if (k, l) == (n, m) else 0.0
                        if abs(v - want) > tol:
                            return False
        return True

    def hecke_roots(self) -> list[QScalar] | None:
        """Eigenvalue list if a quadratic (Hecke) relation holds, else None."""
        for roots in ([qpow(1), -qpow(-1)], [qpow(2), -qpow(-2)]):
            if self._annihilated_by(roots):
                return roots
        return None

    def minimal_cubic(self) -> list[QScalar] | None:
        for roots in ([qpow(2), -qpow(-2), qpow(-4)],):
            if self._annihilated_by(roots):
                return roots
        return None

    def _annihilated_by(self, roots: list[QScalar]) -> bool:
        ident = _identity(self.labels)
        prod = None
        for r in roots:
            factor = {k: v for k, v in self.entries.items()}
            for key, v in ident.items():
                cur = factor.get(key, QScalar.zero()) - ident[key] * r
                if cur.is_zero():
                    factor.pop(key, None)
                else:
                    factor[key] = cur
            prod = factor if prod is None else _compose(self.labels, prod, factor)
        return not prod

    def report(self) -> dict:
        hecke = self.hecke_roots()
        cubic = self.minimal_cubic() if hecke is None else None
        return {
            "space": self.space_name,
            "dimension": self.dimension(),
            "braid": self.check_braid(),
            "invertible": self.check_inverse(),
            "flip_at_q1": self.check_flip_limit(),
            "hecke": [r.render() for r in hecke] if hecke else None,
            "minimal_cubic": [r.render() for r in cubic] if cubic else None,
        }


# -- sparse tensor algebra helpers -------------------------------------------

def _identity(labels) -> Entries:
    out: Entries = {}
    for a in labels:
        for b in labels:
            out[(a, b, a, b)] = ONE
    return out


def _compose(labels, A: Entries, B: Entries) -> Entries:
    """(A o B)^{kl}_{mn} = sum A^{kl}_{ab} B^{ab}_{mn}."""
    by_cols: dict[tuple[str, str], list] = {}
    for (a, b, m, n), v in B.items():
        by_cols.setdefault((a, b), []).append(((m, n), v))
    out: Entries = {}
    for (k, l, a, b), u in A.items():
        for (mn, v) in by_cols.get((a, b), ()):
            key = (k, l) + mn
            s = out.get(key, QScalar.zero()) + u * v
            if s.is_zero():
                out.pop(key, None)
            else:
                out[key] = s
    return out


def _embed(labels, R: Entries, left: bool) -> dict:
    """Embed into the triple tensor power acting on slots (1,2) or (2,3)."""
    out: dict = {}
    for (k, l, m, n), v in R.items():
        for c in labels:
            key = ((k, l, c), (m, n, c)) if left else ((c, k, l), (c, m, n))
            out[key] = v
    return out


def _compose3(labels, A: dict, B: dict) -> dict:
    by_cols: dict = {}
    for (row, col), v in B.items():
        by_cols.setdefault(row, []).append((col, v))
    out: dict = {}
    for (row, mid), u in A.items():
        for (col, v) in by_cols.get(mid, ()):
            key = (row, col)
            s = out.get(key, QScalar.zero()) + u * v
            if s.is_zero():
                out.pop(key, None)
            else:
                out[key] = s
    return out


def _invert(labels, R: Entries) -> Entries:
    """Exact inverse via Gaussian elimination over the fraction field."""
    basis = [(a, b) for a in labels for b in labels]
    index = {p: k for k, p in enumerate(basis)}
    dim = len(basis)
    zero = rational(QScalar.zero())
    one = rational(ONE)
    mat = [[zero] * dim for _ in range(dim)]
    aug = [[one if r == c else zero for c in range(dim)] for r in range(dim)]
    for (k, l, m, n), v in R.items():
        mat[index[(k, l)]][index[(m, n)]] = rational(v)
    for col in range(dim):
        piv = next((r for r in range(col, dim) if not mat[r][col].is_zero()), None)
        if piv is None:
            raise ValueError("R-matrix is singular")
        mat[col], mat[piv] = mat[piv], mat[col]
        aug[col], aug[piv] = aug[piv], aug[col]
        inv = one / mat[col][col]
        mat[col] = [x * inv for x in mat[col]]
        aug[col] = [x * inv for x in aug[col]]
        for r in range(dim):
            if r != col and not mat[r][col].is_zero():
                f = mat[r][col]
                mat[r] = [a - f * b for a, b in zip(mat[r], mat[col])]
                aug[r] = [a - f * b for a, b in zip(aug[r], aug[col])]
    out: Entries = {}
    for r, (k, l) in enumerate(basis):
        for c, (m, n) in enumerate(basis):
            v = aug[r][c]
            if not v.is_zero():
                out[(k, l, m, n)] = v.as_scalar()
    return out


# -- shipped tables -----------------------------------------------------------

def _quantum_plane_rmatrix() -> RMatrix:
    q = qpow(1)
    entries: Entries = {
        ("X1", "X1", "X1", "X1"): q,
        ("X2", "X2", "X2", "X2"): q,
        ("X1", "X2", "X1", "X2"): LAMBDA,
        ("X2", "X1", "X1", "X2"): ONE,
        ("X1", "X2", "X2", "X1"): ONE,
    }
    return RMatrix(QUANTUM_PLANE, ("X1", "X2"), entries, constant_k=qpow(2))


def _euclid3_rmatrix() -> RMatrix:
    q2 = qpow(2)
    qm2 = qpow(-2)
    lam2 = LAMBDA * LAMBDA_PLUS  # q^2 - q^-2
    entries: Entries = {
        ("X+", "X+", "X+", "X+"): q2,
        ("X-", "X-", "X-", "X-"): q2,
        # weight +2 block
        ("X3", "X+", "X+", "X3"): ONE,
        ("X+", "X3", "X3", "X+"): ONE,
        ("X3", "X+", "X3", "X+"): lam2,
        # weight -2 block
        ("X-", "X3", "X3", "X-"): ONE,
        ("X3", "X-", "X-", "X3"): ONE,
        ("X-", "X3", "X-", "X3"): lam2,
        # weight 0 block
        ("X-", "X+", "X+", "X-"): qm2,
        ("X3", "X3", "X3", "X3"): ONE,
        ("X-", "X+", "X3", "X3"): lam2 * qpow(-1),
        ("X+", "X-", "X-", "X+"): qm2,
        ("X3", "X3", "X-", "X+"): lam2 * qpow(-1),
        ("X-", "X+", "X-", "X+"): LAMBDA * lam2 * qpow(-1),
    }
    return RMatrix(EUCLID3, ("X+", "X3", "X-"), entries, constant_k=qpow(2))


_SHIPPED = {
    QUANTUM_PLANE: _quantum_plane_rmatrix,
    EUCLID3: _euclid3_rmatrix,
}

_CACHE: dict[str, RMatrix] = {}


def has_rmatrix(space_name: str) -> bool:
    if space_name in _SHIPPED:
        return True
    directory = config_dir()
    if directory:
        return os.path.exists(os.path.join(directory, "rmatrix_%s.json" % space_name))
    return False


def load_rmatrix(space_name: str) -> RMatrix:
    """Config-dir override first, then the shipped table."""
    directory = config_dir()
    if directory:
        path = os.path.join(directory, "rmatrix_%s.json" % space_name)
        if os.path.exists(path):
            with open(path, "r", encoding="utf-8") as fh:
                return from_config(json.load(fh))
    if space_name not in _SHIPPED:
        raise KeyError(
            "no braiding table for space %r (supply rmatrix_%s.json via "
            "QSPACE_CONFIG_DIR)" % (space_name, space_name)
        )
    if space_name not in _CACHE:
        _CACHE[space_name] = _SHIPPED[space_name]()
    return _CACHE[space_name]


def to_config(r: RMatrix) -> dict:
    return {
        "space": r.space_name,
        "dimension": r.dimension(),
        "labels": list(r.labels),
        "constant_k": r.constant_k.render(),
        "entries": [
            [list(key[:2]), list(key[2:]), v.render()]
            for key, v in sorted(r.entries.items())
        ],
    }


def from_config(data: dict) -> RMatrix:
    entries: Entries = {}
    for kl, mn, text in data["entries"]:
        entries[(kl[0], kl[1], mn[0], mn[1])] = QScalar.parse(text)
    return RMatrix(
        data["space"],
        tuple(data["labels"]),
        entries,
        QScalar.parse(data["constant_k"]),
    )
