"""Exception types shared across the package."""


class PosetCheckError(Exception):
    """Base class for all errors raised by this package."""


class PosetAxiomError(PosetCheckError):
    """A candidate order relation violates one of the poset axioms."""


class NotReflexiveError(PosetAxiomError):
    def __init__(self, element):
        self.element = element
        super().__init__(f"relation is not reflexive: missing ({element!r}, {element!r})")


class NotAntisymmetricError(PosetAxiomError):
    def __init__(self, p, q):
        self.pair = (p, q)
        super().__init__(f"relation is not antisymmetric: both ({p!r}, {q!r}) and ({q!r}, {p!r}) present")


class NotTransitiveError(PosetAxiomError):
    def __init__(self, p, q, r):
        self.triple = (p, q, r)
        super().__init__(
            f"relation is not transitive: ({p!r}, {q!r}) and ({q!r}, {r!r}) present but ({p!r}, {r!r}) missing"
        )


class CyclicCoversError(PosetCheckError):
    def __init__(self, cycle):
        self.cycle = tuple(cycle)
        super().__init__(f"cover digraph contains a cycle: {' -> '.join(repr(c) for c in self.cycle)}")


class SentenceSyntaxError(PosetCheckError):
    def __init__(self, position, expected, found=None):
        self.position = position
        self.expected = expected
        self.found = found
        detail = f", found {found!r}" if found is not None else ""
        super().__init__(f"syntax error at position {position}: expected {expected}{detail}")


class FreeVariableError(PosetCheckError):
    def __init__(self, name):
        self.name = name
        super().__init__(f"free variable: {name!r} is not bound by the quantifier prefix")


class NonExistentialQuantifierError(PosetCheckError):
    def __init__(self, quantifier="forall"):
        self.quantifier = quantifier
        super().__init__(f"only existential quantifiers are supported, found {quantifier!r}")


class BlowupLimitExceededError(PosetCheckError):
    def __init__(self, count):
        self.count = count
        super().__init__(f"disjunct candidate count exceeded the configured cap ({count})")


class InfeasibleKError(PosetCheckError):
    def __init__(self, k, domain_size):
        self.k = k
        self.domain_size = domain_size
        super().__init__(f"cannot build a {k}-perfect family on a domain of size {domain_size}")


class BudgetExhaustedError(PosetCheckError):
    """Randomized hash family construction ran out of iterations; retriable with a new seed."""


class TooLargeToVerifyError(PosetCheckError):
    """Exhaustive verification would exceed the configured guard."""


class ChainMismatchError(PosetCheckError):
    """Coordinatization chains are not disjoint chains of the base poset."""


class ColoringRangeError(PosetCheckError):
    """A coloring is not total on its chain or maps outside its color range."""


class SizeCapExceededError(PosetCheckError):
    def __init__(self, size, cap):
        self.size = size
        self.cap = cap
        super().__init__(f"universe of size {size} exceeds the materialization cap {cap}")


class VocabularyMismatchError(PosetCheckError):
    """Source and target of a homomorphism instance use different vocabularies."""


class InternalError(PosetCheckError):
    """A defense-in-depth verification failed; this indicates a bug."""


class BudgetExceededError(PosetCheckError):
    """The embedding search exhausted its enumeration budget."""


class LatticeTooLargeError(PosetCheckError):
    def __init__(self, cap):
        self.cap = cap
        super().__init__(f"antichain count exceeds the lattice cap ({cap})")


class FormulaNotInClassError(PosetCheckError):
    """A CNF formula violates the invariants of the requested gadget class."""


class CapExceededError(PosetCheckError):
    """A brute-force oracle refused to run past its hard size or node cap."""
