"""2-SAT over arbitrary hashable variables, solved via the implication
graph and strongly connected components (linear time, iterative Tarjan)."""

from __future__ import annotations


class _Const:
    def __init__(self, name):
        self.name = name

    def __repr__(self):
        return self.name


TOP = _Const("TOP")
BOT = _Const("BOT")


class TwoSatInstance:
    """Clauses are tuples of 1 or 2 literals; a literal is (var, positive).
    The constants TOP and BOT may appear in the input clause list: TOP
    clauses are dropped, a BOT clause makes the instance a contradiction."""

    def __init__(self, clauses):
        kept = []
        contradiction = False
        for c in clauses:
            if c is TOP:
                continue
            if c is BOT:
                contradiction = True
                continue
            c = tuple(c)
            if len(c) not in (1, 2):
                raise ValueError(f"clause of width {len(c)}")
            for var, pos in c:
                if not isinstance(pos, bool):
                    raise ValueError(f"literal sign must be a bool, got {pos!r}")
            kept.append(c)
        self.clauses = tuple(kept)
        self.has_contradiction = contradiction

    def variables(self):
        return {var for c in self.clauses for var, _ in c}

    def check(self, assignment) -> bool:
        if self.has_contradiction:
            return False
        return all(any(assignment[var] == pos for var, pos in c)
                   for c in self.clauses)


def two_sat_solve(inst: TwoSatInstance):
    """A satisfying assignment (dict var -> bool) or None."""
    if inst.has_contradiction:
        return None
    variables = sorted(inst.variables(), key=repr)
    index = {v: i for i, v in enumerate(variables)}
    n = len(variables)

    # literal (var, pos) -> node 2*index[var] + (1 if pos else 0)
    adj = [[] for _ in range(2 * n)]
    for c in inst.clauses:
        if len(c) == 1:
            (v, p), = c
            i = 2 * index[v]
            adj[i + (not p)].append(i + p)
        else:
            (v1, p1), (v2, p2) = c
            i1, i2 = 2 * index[v1], 2 * index[v2]
            adj[i1 + (not p1)].append(i2 + p2)
            adj[i2 + (not p2)].append(i1 + p1)

    comp = _tarjan_scc(adj)
    assignment = {}
    for v in variables:
        i = 2 * index[v]
        cp, cn = comp[i + 1], comp[i]
        if cp == cn:
            return None
        # Tarjan numbers components in reverse topological order, so the
        # literal whose component comes later in topological order (smaller
        # Tarjan id) is the one to satisfy.
        assignment[v] = cp < cn
    return assignment


def _tarjan_scc(adj):
    n = len(adj)
    comp = [-1] * n
    low = [0] * n
    num = [-1] * n
    counter = 0
    comp_count = 0
    stack = []
    on_stack = [False] * n

    for root in range(n):
        if num[root] != -1:
            continue
        # iterative Tarjan: work items are (node, edge iterator)
        num[root] = low[root] = counter
        counter += 1
        stack.append(root)
        on_stack[root] = True
        work = [(root, iter(adj[root]))]
        while work:
            v, it = work[-1]
            descended = False
            for w in it:
                if num[w] == -1:
                    num[w] = low[w] = counter
                    counter += 1
                    stack.append(w)
                    on_stack[w] = True
                    work.append((w, iter(adj[w])))
                    descended = True
                    break
                if on_stack[w] and num[w] < low[v]:
                    low[v] = num[w]
            if descended:
                continue
            work.pop()
            if low[v] == num[v]:
                while True:
                    w = stack.pop()
                    on_stack[w] = False
                    comp[w] = comp_count
                    if w == v:
                        break
                comp_count += 1
            if work:
                parent = work[-1][0]
                if low[v] < low[parent]:
                    low[parent] = low[v]
    return comp
