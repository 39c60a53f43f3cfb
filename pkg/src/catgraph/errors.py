"""Exception hierarchy for catgraph."""


class CatGraphError(ValueError):
    """Base class for every domain error raised by the library."""


class DanglingEndpoint(CatGraphError):
    pass


class VertexWithIncidence(CatGraphError):
    pass


class EmptyVertexNonemptyParts(CatGraphError):
    pass


class DuplicateId(CatGraphError):
    pass


class UnknownName(CatGraphError):
    pass


class BadParameter(CatGraphError):
    pass


class ObjectNotInCategory(CatGraphError):
    pass


class InvalidMorphism(CatGraphError):
    pass


class NonComposable(CatGraphError):
    pass


class NotParallel(CatGraphError):
    pass


class NotCospan(CatGraphError):
    pass


class NotMono(CatGraphError):
    pass


class NoClassifier(CatGraphError):
    pass


class NoTranspose(CatGraphError):
    pass


class WrongCategory(CatGraphError):
    pass
