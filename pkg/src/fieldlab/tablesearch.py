"""Exhaustive search for field operation tables on n labels.

Labels 0 and 1 are pinned as the additive and multiplicative identities.
Every other cell of the two (commutative) tables is a variable.  The
search is a backtracking fill with

* the sudoku rule: each addition row is a permutation of all labels and
  each nonzero multiplication row a permutation of the nonzero labels;
* ground instances of associativity (both tables) and distributivity,
  re-evaluated whenever a cell they are waiting on gets filled.  A law
  whose one side is known either fixes the other side's outer cell
  directly or, through the sudoku rule, fixes its inner cell.

Cells are branched on most-constrained first, ties going to the addition
table in row-major order.  Every complete fill is re-checked with
:func:`fieldlab.gfield.verify_field_axioms` before it is accepted.

With ``symmetry_breaking=True`` only one representative per relabeling
class is searched for (labels not yet mentioned are interchangeable), and
the raw solution list is recovered by applying every relabeling that fixes
0 and 1.  This is what makes orders 8..12 tractable.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field

from .errors import LimitExceeded, MismatchError
from .gfield import OpTablePair, verify_field_axioms

ADD, MUL = 0, 1
MAX_ORDER = 7
MAX_LARGE_ORDER = 12
# largest (n-2)! for which the raw solution list is materialised
MAX_RELABELINGS = 40320


@dataclass
class SearchResult:
    size: int
    solutions: list[OpTablePair]
    raw_count: int
    iso_classes: int
    nodes_explored: int = field(compare=False)

    def to_dict(self) -> dict:
        return {"size": self.size, "raw_count": self.raw_count,
                "iso_classes": self.iso_classes,
                "nodes_explored": self.nodes_explored,
                "solutions": [t.to_dict() for t in self.solutions]}

    @classmethod
    def from_dict(cls, d) -> SearchResult:
        return cls(d["size"], [OpTablePair.from_dict(t) for t in d["solutions"]],
                   d["raw_count"], d["iso_classes"], d["nodes_explored"])


class _Conflict(Exception):
    pass


def _laws(n):
    """Ground instances of the laws as pairs of flattened sides.

    A side ``op(X, Y)`` is stored as ``(op, xop, x1, x2, yop, y1, y2)``;
    an operand with ``xop == -1`` is the constant label ``x1``, otherwise
    it is the cell ``xop(x1, x2)``.  Inner operands are always constants.
    Instances that hold because of the pinned identities are skipped, as
    are mirror images made redundant by commutativity.
    """
    laws = []
    for a in range(1, n):
        for b in range(1, n):
            for c in range(a, n):
                laws.append(((ADD, ADD, a, b, -1, c, 0), (ADD, -1, a, 0, ADD, b, c)))
    for a in range(2, n):
        for b in range(2, n):
            for c in range(a, n):
                laws.append(((MUL, MUL, a, b, -1, c, 0), (MUL, -1, a, 0, MUL, b, c)))
    for a in range(2, n):
        for b in range(1, n):
            for c in range(b, n):
                laws.append(((MUL, -1, a, 0, ADD, b, c), (ADD, MUL, a, b, MUL, a, c)))
    return laws


class _Solver:
    def __init__(self, n, reverse=False, symmetry_breaking=False):
        self.n = n
        self.reverse = reverse
        self.symmetry_breaking = symmetry_breaking
        self.tab = [[-1] * (n * n), [-1] * (n * n)]
        # pos[op][row][value] -> column holding value, or -1
        self.pos = [[[-1] * n for _ in range(n)] for _ in range(2)]
        self.trail = []
        self.laws = _laws(n)
        # watch[cell id] -> laws currently blocked on that cell; cell id is
        # op*n*n + i*n + j with i <= j
        self.watch = [set() for _ in range(2 * n * n)]
        self.watch_trail = []
        self.queue = []
        self.dirty = set()
        self.nodes = 0
        self.found = []
        for x in range(n):
            self._set(ADD, 0, x, x)
            self._set(MUL, 0, x, 0)
            self._set(MUL, 1, x, x)
        self.trail.clear()

    # cell bookkeeping ----------------------------------------------------

    def _set(self, op, i, j, v):
        n = self.n
        self.tab[op][i * n + j] = v
        self.tab[op][j * n + i] = v
        if op == ADD or i:
            self.pos[op][i][v] = j
        if op == ADD or j:
            self.pos[op][j][v] = i
        self.trail.append((op, i, j, v))

    def _mark(self):
        return len(self.trail), len(self.watch_trail)

    def _undo(self, mark):
        n = self.n
        cells, watches = mark
        while len(self.trail) > cells:
            op, i, j, v = self.trail.pop()
            self.tab[op][i * n + j] = -1
            self.tab[op][j * n + i] = -1
            if op == ADD or i:
                self.pos[op][i][v] = -1
            if op == ADD or j:
                self.pos[op][j][v] = -1
        watch = self.watch
        while len(self.watch_trail) > watches:
            cell, law, saved = self.watch_trail.pop()
            if saved is None:
                watch[cell].discard(law)
            else:
                watch[cell] = saved

    def assign(self, op, i, j, v):
        n = self.n
        cur = self.tab[op][i * n + j]
        if cur >= 0:
            if cur != v:
                raise _Conflict
            return
        if op == MUL and v == 0:
            # i, j are nonzero here: row 0 is pinned
            raise _Conflict
        if self.pos[op][i][v] >= 0 or self.pos[op][j][v] >= 0:
            raise _Conflict
        self._set(op, i, j, v)
        self.dirty.add((op, i))
        self.dirty.add((op, j))
        cell = op * n * n + (i * n + j if i <= j else j * n + i)
        waiting = self.watch[cell]
        if waiting:
            self.queue.extend(waiting)
            self.watch[cell] = set()
            self.watch_trail.append((cell, -1, waiting))

    # law evaluation ------------------------------------------------------

    def _side(self, side, blocked):
        """Value of a flattened side, or None (recording the blocking cell)."""
        n = self.n
        tab = self.tab
        op, xop, x1, x2, yop, y1, y2 = side
        if xop < 0:
            vx = x1
        else:
            vx = tab[xop][x1 * n + x2]
            if vx < 0:
                blocked.append(xop * n * n + (x1 * n + x2 if x1 <= x2 else x2 * n + x1))
        if yop < 0:
            vy = y1
        else:
            vy = tab[yop][y1 * n + y2]
            if vy < 0:
                blocked.append(yop * n * n + (y1 * n + y2 if y1 <= y2 else y2 * n + y1))
        if vx < 0 or vy < 0:
            return None, vx, vy
        v = tab[op][vx * n + vy]
        if v < 0:
            blocked.append(op * n * n + (vx * n + vy if vx <= vy else vy * n + vx))
            return None, vx, vy
        return v, vx, vy

    def _force(self, side, vx, vy, r):
        """Make ``side`` evaluate to r where that pins down a single cell."""
        op, xop, x1, x2, yop, y1, y2 = side
        if vx >= 0 and vy >= 0:
            self.assign(op, vx, vy, r)
            return
        if vx >= 0:
            known, iop, a, b = vx, yop, y1, y2
        else:
            known, iop, a, b = vy, xop, x1, x2
        if known < 0:
            return
        if op == MUL and known == 0:
            if r != 0:
                raise _Conflict
            return
        target = self.pos[op][known][r]
        if target >= 0:
            self.assign(iop, a, b, target)

    def check_law(self, k):
        lhs, rhs = self.laws[k]
        blocked = []
        L, lx, ly = self._side(lhs, blocked)
        R, rx, ry = self._side(rhs, blocked)
        if L is not None and R is not None:
            if L != R:
                raise _Conflict
            return
        if L is not None:
            self._force(rhs, rx, ry, L)
        elif R is not None:
            self._force(lhs, lx, ly, R)
        watch = self.watch
        for cell in blocked:
            if k not in watch[cell]:
                watch[cell].add(k)
                self.watch_trail.append((cell, k, None))

    def propagate(self):
        while self.queue or self.dirty:
            while self.queue:
                self.check_law(self.queue.pop())
            if self.dirty:
                self._singles(*self.dirty.pop())

    def _singles(self, op, i):
        """Sudoku rule on row i: a cell with one possible label, or a label
        with one possible cell, is filled in."""
        n = self.n
        lo = 0 if op == ADD else 1
        if op == MUL and i == 0:
            return
        row = self.tab[op][i * n:(i + 1) * n]
        pos = self.pos[op]
        open_cols = [j for j in range(lo, n) if row[j] < 0]
        if not open_cols:
            return
        missing = [v for v in range(lo, n) if pos[i][v] < 0]
        for v in missing:
            cols = [j for j in open_cols if pos[j][v] < 0]
            if not cols:
                raise _Conflict
            if len(cols) == 1:
                self.assign(op, i, cols[0], v)
        for j in open_cols:
            if self.tab[op][i * n + j] >= 0:
                continue
            vals = [v for v in missing if pos[i][v] < 0 and pos[j][v] < 0]
            if not vals:
                raise _Conflict
            if len(vals) == 1:
                self.assign(op, i, j, vals[0])

    # branching -----------------------------------------------------------

    def _used(self):
        used = {0, 1}
        for op, i, j, v in self.trail:
            used.update((i, j, v))
        return used

    def _candidates(self, op, i, j):
        lo = 0 if op == ADD else 1
        pi, pj = self.pos[op][i], self.pos[op][j]
        return [v for v in range(lo, self.n) if pi[v] < 0 and pj[v] < 0]

    def choose(self):
        """Pick (op, i, j, values) to branch on; None when complete."""
        n = self.n
        used = self._used() if self.symmetry_breaking else None
        best = None
        pending = False
        for op in (ADD, MUL):
            t = self.tab[op]
            for i in range(1, n):
                for j in range(i, n):
                    if t[i * n + j] >= 0:
                        continue
                    pending = True
                    if used is not None and (i not in used or j not in used):
                        continue
                    cands = self._candidates(op, i, j)
                    if best is None or len(cands) < len(best[3]):
                        best = (op, i, j, cands)
                        if not cands:
                            return best
        if not pending:
            return None
        if best is None:
            # every cell among mentioned labels is filled; bring in the next label
            u = min(set(range(n)) - used)
            best = (ADD, 1, u, self._candidates(ADD, 1, u))
        if used is not None:
            op, i, j, cands = best
            used = used | {i, j}
            fresh = [v for v in cands if v not in used]
            cands = [v for v in cands if v in used] + fresh[:1]
            cands.sort()
            best = (op, i, j, cands)
        return best

    def run(self):
        try:
            self.queue.extend(range(len(self.laws)))
            self.propagate()
        except _Conflict:
            return
        self._search()

    def _search(self):
        self.nodes += 1
        pick = self.choose()
        if pick is None:
            self._emit()
            return
        op, i, j, cands = pick
        if self.reverse:
            cands = cands[::-1]
        for v in cands:
            mark = self._mark()
            self.queue.clear()
            self.dirty.clear()
            try:
                self.assign(op, i, j, v)
                self.propagate()
            except _Conflict:
                self._undo(mark)
                continue
            self._search()
            self._undo(mark)

    def _emit(self):
        n = self.n
        add = [self.tab[ADD][r * n:(r + 1) * n] for r in range(n)]
        mul = [self.tab[MUL][r * n:(r + 1) * n] for r in range(n)]
        t = OpTablePair(n, add, mul)
        bad = verify_field_axioms(t)
        assert not bad, bad
        self.found.append(t)


def relabelings(n):
    """Every permutation of range(n) fixing 0 and 1."""
    for rest in itertools.permutations(range(2, n)):
        yield (0, 1) + rest


def enumerate_field_tables(n: int, *, allow_large: bool = False, reverse: bool = False,
                           symmetry_breaking: bool | None = None) -> SearchResult:
    """All field table pairs on labels 0..n-1 with 0 and 1 as identities.

    ``n`` is limited to 2..7 unless ``allow_large`` (then up to 12).  By
    default orders up to 7 are searched label by label, larger ones with
    symmetry breaking.
    """
    limit = MAX_LARGE_ORDER if allow_large else MAX_ORDER
    if not 2 <= n <= limit:
        raise LimitExceeded(f"order must lie in [2, {limit}], got {n}")
    if symmetry_breaking is None:
        symmetry_breaking = n > MAX_ORDER
    solver = _Solver(n, reverse=reverse, symmetry_breaking=symmetry_breaking)
    solver.run()
    if symmetry_breaking:
        reps = []
        for t in solver.found:
            if not any(tables_isomorphic(r, t) for r in reps):
                reps.append(t)
        if reps and math.factorial(n - 2) > MAX_RELABELINGS:
            raise LimitExceeded(f"listing every raw solution of order {n} is too large")
        raw = {t.relabel(s) for t in reps for s in relabelings(n)}
        solutions = sorted(raw, key=OpTablePair.sort_key)
        classes = len(reps)
    else:
        solutions = sorted(solver.found, key=OpTablePair.sort_key)
        classes = count_iso_classes(solutions)
    return SearchResult(n, solutions, len(solutions), classes, solver.nodes)


def count_iso_classes(tables) -> int:
    reps = []
    for t in tables:
        if not any(tables_isomorphic(r, t) is not None for r in reps):
            reps.append(t)
    return len(reps)


def tables_isomorphic(t1: OpTablePair, t2: OpTablePair):
    """A relabeling sigma (tuple, sigma[i] is the image of label i) with
    sigma(0) = 0 and sigma(1) = 1 carrying both tables of t1 onto t2, or None.

    Backtracks over images of the smallest unmapped label; each choice is
    closed under both operations before going deeper.
    """
    if t1.size != t2.size:
        raise MismatchError(f"table sizes differ: {t1.size} vs {t2.size}")
    n = t1.size
    sigma = [-1] * n
    taken = [False] * n

    def extend(pairs, changes):
        todo = list(pairs)
        while todo:
            a, b = todo.pop()
            if sigma[a] >= 0:
                if sigma[a] != b:
                    return False
                continue
            if taken[b]:
                return False
            sigma[a] = b
            taken[b] = True
            changes.append(a)
            for c in range(n):
                if sigma[c] < 0:
                    continue
                sc = sigma[c]
                todo.append((t1.add[a][c], t2.add[b][sc]))
                todo.append((t1.mul[a][c], t2.mul[b][sc]))
        return True

    def undo(changes):
        for a in changes:
            taken[sigma[a]] = False
            sigma[a] = -1

    def search():
        try:
            x = sigma.index(-1)
        except ValueError:
            return True
        for y in range(n):
            if taken[y]:
                continue
            changes = []
            if extend([(x, y)], changes) and search():
                return True
            undo(changes)
        return False

    changes = []
    if not extend([(0, 0), (1, 1)], changes) or not search():
        return None
    perm = tuple(sigma)
    if t1.relabel(perm) != t2:
        return None
    return perm
