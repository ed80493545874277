"""Named graphs used throughout the tests, demos and documentation."""

from .graphs import Graph, OMEGA


def single_loop() -> Graph:
    """One vertex with one loop; the algebra is the Laurent ring."""
    return Graph(["v"], {("v", "v"): 1})


def rose(loops: int = 2, vertex: str = "v") -> Graph:
    """One vertex with the given number of parallel loops."""
    return Graph([vertex], {(vertex, vertex): loops})


def toeplitz() -> Graph:
    """A loop at v plus an edge v -> w; the Toeplitz graph."""
    return Graph(["v", "w"], {("v", "v"): 1, ("v", "w"): 1})


def acyclic_chain(n: int = 3) -> Graph:
    """A path u0 -> u1 -> ... with no cycles."""
    vs = [f"u{i}" for i in range(n)]
    return Graph(vs, {(vs[i], vs[i + 1]): 1 for i in range(n - 1)})


def two_disjoint_loops() -> Graph:
    """Two vertices, each with a single loop, no other edges."""
    return Graph(["v1", "v2"], {("v1", "v1"): 1, ("v2", "v2"): 1})


def chain_of_roses(n: int = 2) -> Graph:
    """Finite truncation of the descending chain of two-loop vertices.

    Vertices v1..vn each carry two loops, with edges v(i+1) -> vi; every
    ideal of the algebra is a graded prime and they form a chain.
    """
    vs = [f"v{i}" for i in range(1, n + 1)]
    bundles = {(v, v): 2 for v in vs}
    for i in range(1, n):
        bundles[(vs[i], vs[i - 1])] = 1
    return Graph(vs, bundles)


def two_disjoint_roses() -> Graph:
    """Two separated two-loop roses; the algebra splits into two simple summands."""
    return Graph(["r1", "r2"], {("r1", "r1"): 2, ("r2", "r2"): 2})


def infinite_emitter_fork() -> Graph:
    """u emits an infinite bundle to sink a and a single edge to sink b.

    The smallest graph with a breaking vertex: u breaks {a}.
    """
    return Graph(["u", "a", "b"], {("u", "a"): OMEGA, ("u", "b"): 1})


NAMED = {
    "L1": single_loop,
    "R2": rose,
    "T1": toeplitz,
    "A3": acyclic_chain,
    "D2": two_disjoint_loops,
    "C2": chain_of_roses,
    "B1": infinite_emitter_fork,
    "RR": two_disjoint_roses,
}


def named_graph(name: str) -> Graph:
    return NAMED[name]()
