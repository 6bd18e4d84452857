"""Kernels of digraphs.

A kernel is an independent vertex set U such that every vertex outside U has
an arc into U. Digraphs without odd directed cycles always have one and
:func:`richardson_kernel` finds it in polynomial time; :func:`brute_force_kernel`
and :func:`is_kernel_perfect` are exhaustive and meant for small digraphs.
"""

from __future__ import annotations

from collections import deque
from collections.abc import Iterable

from .errors import OddCycleError, ResourceLimitError
from .graph import Biorientation, strongly_connected_components

BRUTE_FORCE_MAX_N = 20
KERNEL_PERFECT_MAX_N = 15


def is_kernel(digraph: Biorientation, candidate: Iterable[str]) -> bool:
    members = digraph.base.check_vertices(candidate)
    for v in digraph.vertices:
        heads = digraph.successors(v)
        if v in members:
            if any(h in members for h in heads):
                return False
        elif not any(h in members for h in heads):
            return False
    return True


def _parity_bfs(digraph: Biorientation, component: list[str]):
    """BFS along arcs inside ``component`` from its first vertex.

    Returns (distance, parent) maps; every vertex of a strong component is
    reached.
    """
    inside = set(component)
    root = component[0]
    dist = {root: 0}
    parent: dict[str, str | None] = {root: None}
    queue = deque([root])
    while queue:
        x = queue.popleft()
        for y in digraph.successors(x):
            if y in inside and y not in dist:
                dist[y] = dist[x] + 1
                parent[y] = x
                queue.append(y)
    return dist, parent


def _path_to_root(digraph: Biorientation, component: list[str], start: str) -> list[str]:
    """Shortest directed path start -> root inside the component, BFS on reversed arcs."""
    inside = set(component)
    root = component[0]
    nxt: dict[str, str | None] = {root: None}
    queue = deque([root])
    while queue and start not in nxt:
        x = queue.popleft()
        for y in digraph.predecessors(x):
            if y in inside and y not in nxt:
                nxt[y] = x
                queue.append(y)
    path = [start]
    while path[-1] != root:
        path.append(nxt[path[-1]])
    return path


def _tree_path(parent: dict[str, str | None], target: str) -> list[str]:
    path = [target]
    while parent[path[-1]] is not None:
        path.append(parent[path[-1]])
    path.reverse()
    return path


def _odd_cycle_in_walk(walk: list[str]) -> list[str]:
    """Extract an odd simple directed cycle from an odd closed walk.

    ``walk`` starts and ends at the same vertex. Whenever a vertex repeats,
    the segment between the two visits is a simple closed walk; it is
    returned if odd, otherwise spliced out (the remainder stays odd).
    """
    stack: list[str] = []
    pos: dict[str, int] = {}
    for v in walk:
        if v in pos:
            i = pos[v]
            cycle = stack[i:] + [v]
            if (len(cycle) - 1) % 2 == 1:
                return cycle
            for w in stack[i + 1 :]:
                del pos[w]
            del stack[i + 1 :]
        else:
            pos[v] = len(stack)
            stack.append(v)
    raise AssertionError("closed walk of odd length contains an odd cycle")


def find_odd_directed_cycle(digraph: Biorientation) -> list[str] | None:
    """An odd directed cycle as ``[v0, v1, ..., v0]``, or None if there is none.

    Inside each strong component, parities of BFS distance from a root must
    alternate along every arc exactly when the component has no odd closed
    walk.
    """
    for comp in strongly_connected_components(digraph):
        if len(comp) < 2:
            continue
        inside = set(comp)
        dist, parent = _parity_bfs(digraph, comp)
        for x in comp:
            for y in digraph.successors(x):
                if y not in inside or (dist[x] - dist[y]) % 2 == 1:
                    continue
                # root->x, x->y, y->root  versus  root->y, y->root: one is odd
                back = _path_to_root(digraph, comp, y)
                walk = _tree_path(parent, x) + back
                if (len(walk) - 1) % 2 == 0:
                    walk = _tree_path(parent, y) + back[1:]
                return _odd_cycle_in_walk(walk)
    return None


def richardson_kernel(digraph: Biorientation) -> frozenset[str]:
    """Kernel of a digraph with no odd directed cycle.

    Repeatedly take the terminal strong component containing the earliest
    vertex. A singleton is its own kernel; a larger one is bipartitioned by
    walk parity and its even class is a kernel of it. Add that kernel, delete
    the component and every vertex with an arc into the kernel, and repeat.
    Raises :class:`OddCycleError` if the precondition fails.
    """
    witness = find_odd_directed_cycle(digraph)
    if witness is not None:
        raise OddCycleError(witness)

    order = digraph.base._index
    alive = set(digraph.vertices)
    kernel: set[str] = set()
    current = digraph
    while alive:
        comps = strongly_connected_components(current)
        where = {v: i for i, comp in enumerate(comps) for v in comp}
        terminal = [
            comp
            for i, comp in enumerate(comps)
            if all(where[h] == i for v in comp for h in current.successors(v))
        ]
        comp = min(terminal, key=lambda c: order[c[0]])
        if len(comp) == 1:
            chosen = set(comp)
        else:
            dist, _ = _parity_bfs(current, comp)
            chosen = {v for v in comp if dist[v] % 2 == 0}
        kernel |= chosen
        dead = set(comp)
        for u in chosen:
            dead.update(current.predecessors(u))
        alive -= dead
        current = current.induced(alive)
    return frozenset(kernel)


def _masks(digraph: Biorientation):
    idx = digraph.base._index
    n = len(digraph.vertices)
    out = [0] * n
    adj = [0] * n
    for tail, head, _ in digraph.arcs():
        t, h = idx[tail], idx[head]
        out[t] |= 1 << h
        adj[t] |= 1 << h
        adj[h] |= 1 << t
    return out, adj


def _first_kernel_mask(out: list[int], adj: list[int], within: int) -> int | None:
    """Lexicographically first kernel of the subdigraph induced on ``within``.

    Depth-first search over increasing index sequences visits subsets in
    lexicographic order; non-independent prefixes are pruned, as is any
    prefix leaving a skipped vertex with no possible dominator.
    """
    verts = [i for i in range(len(out)) if within >> i & 1]
    if not verts:
        return 0

    def dominated(chosen: int) -> bool:
        for v in verts:
            if not chosen >> v & 1 and not out[v] & chosen:
                return False
        return True

    def search(chosen: int, blocked: int, start: int) -> int | None:
        if dominated(chosen):
            return chosen
        for k in range(start, len(verts)):
            v = verts[k]
            if blocked >> v & 1:
                continue
            grown = chosen | 1 << v
            nb = blocked | adj[v] | 1 << v
            if not _viable(grown, nb, verts, k, out):
                continue
            found = search(grown, nb, k + 1)
            if found is not None:
                return found
        return None

    return search(0, 0, 0)


def _viable(chosen: int, blocked: int, verts: list[int], k: int, out: list[int]) -> bool:
    # vertices before position k that are not chosen can only be dominated by
    # chosen ones or by vertices after k that are still addable
    addable = 0
    for v in verts[k + 1 :]:
        if not blocked >> v & 1:
            addable |= 1 << v
    reach = chosen | addable
    for v in verts[: k + 1]:
        if not chosen >> v & 1 and not out[v] & reach:
            return False
    return True


def brute_force_kernel(digraph: Biorientation, max_n: int = BRUTE_FORCE_MAX_N) -> frozenset[str] | None:
    """Lexicographically first kernel by vertex index sequence, or None."""
    n = len(digraph.vertices)
    if n > max_n:
        raise ResourceLimitError(f"brute-force kernel search limited to {max_n} vertices, got {n}")
    out, adj = _masks(digraph)
    found = _first_kernel_mask(out, adj, (1 << n) - 1)
    if found is None:
        return None
    return frozenset(v for i, v in enumerate(digraph.vertices) if found >> i & 1)


def is_kernel_perfect(
    digraph: Biorientation, max_n: int = KERNEL_PERFECT_MAX_N
) -> tuple[bool, Biorientation | None]:
    """Check every induced subdigraph for a kernel.

    Returns (True, None) or (False, first kernel-less induced subdigraph).
    """
    n = len(digraph.vertices)
    if n > max_n:
        raise ResourceLimitError(f"kernel-perfectness check limited to {max_n} vertices, got {n}")
    out, adj = _masks(digraph)
    for mask in range(1, 1 << n):
        sub_out = [o & mask for o in out]
        sub_adj = [a & mask for a in adj]
        if _first_kernel_mask(sub_out, sub_adj, mask) is None:
            keep = [v for i, v in enumerate(digraph.vertices) if mask >> i & 1]
            return False, digraph.induced(keep)
    return True, None

