"""Exception hierarchy shared across the package."""


class HrgError(Exception):
    pass


class GraphError(HrgError, ValueError):
    """Invalid graph data (bad endpoint, loop, malformed adjacency)."""


class ParseError(HrgError, ValueError):
    def __init__(self, message, *, offset=None, line=None):
        where = []
        if line is not None:
            where.append(f"line {line}")
        if offset is not None:
            where.append(f"byte {offset}")
        super().__init__(f"{message} ({', '.join(where)})" if where else message)
        self.offset = offset
        self.line = line


class PreconditionError(HrgError, ValueError):
    """An operation was called outside its domain."""


class NotRegular(PreconditionError):
    pass


class Disconnected(PreconditionError):
    pass


class NotHrg(PreconditionError):
    pass


class DiameterTooSmall(PreconditionError):
    pass


class IsDistanceRegular(PreconditionError):
    pass


class NotEquitable(HrgError):
    """Two vertices of one cell see different numbers of neighbours in another cell."""

    def __init__(self, cell, y1, y2, target):
        super().__init__(
            f"cell {cell}: vertices {y1} and {y2} have different neighbour counts in cell {target}"
        )
        self.cell = cell
        self.vertices = (y1, y2)
        self.target = target


class AxiomViolation(HrgError):
    def __init__(self, axiom, witness, detail=""):
        msg = f"{axiom} violated at {witness}"
        super().__init__(f"{msg}: {detail}" if detail else msg)
        self.axiom = axiom
        self.witness = witness


class InternalInconsistency(HrgError, AssertionError):
    """A proven identity failed; indicates a bug, never a property of the input."""


class ConvergenceError(HrgError, ArithmeticError):
    def __init__(self, sweeps, residual):
        super().__init__(f"Jacobi did not converge in {sweeps} sweeps (off-diagonal {residual:.3e})")
        self.sweeps = sweeps
        self.residual = residual
