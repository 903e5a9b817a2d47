"""Exception taxonomy shared by all valgen modules."""


class ValgenError(Exception):
    """Base class for all valgen errors."""


# --- data loading -----------------------------------------------------------

class SchemaError(ValgenError):
    """A fixture file does not match its documented schema."""


class DanglingReference(SchemaError):
    """A pattern or entry references a slot/lexeme that does not exist."""


class DuplicateId(SchemaError):
    """Two objects share an identifier that must be unique."""


class OrphanNode(SchemaError):
    """An ontology node whose parent path is missing."""


class DuplicatePath(SchemaError):
    """Two ontology nodes share the same class path."""


class FormatError(ValgenError):
    """A frequency table or vector file is syntactically malformed."""


class InconsistentPerMillion(FormatError):
    """A per-million column deviates >1% from count/corpus_size."""


class DimensionMismatch(FormatError):
    """A vector row does not match the declared dimension."""


class ZeroVector(FormatError):
    """A vector with zero norm was rejected at load."""


class DuplicateWord(FormatError):
    """The same word appears twice in a vector file."""


# --- lookups ----------------------------------------------------------------

class UnknownPath(ValgenError):
    """A semantic class path is not present in the ontology."""


class UnknownFrame(ValgenError):
    """No valency frame for the requested (language, lemma)."""


class UnknownPattern(ValgenError):
    """The requested pattern id is not offered by the frame."""


class UnknownSlot(ValgenError):
    """The requested argument slot is not bound by the pattern."""


class MissingVector(ValgenError):
    """A lexeme has no vector in the store."""


class LexemeAbsent(ValgenError):
    """A lexeme appears in neither of the contrasted tables."""


class UnannotatedFiller(ValgenError):
    """Strict filtering hit a top-ranked filler without a role annotation."""


# --- realization ------------------------------------------------------------

class MissingForm(ValgenError):
    """An inflection table lacks the requested cell."""


class InvalidFeatureCombination(ValgenError):
    """No closed-table form exists for the feature combination."""


class MissingLinkElement(ValgenError):
    """A compound modifier has no linking element defined."""


class MissingBinding(ValgenError):
    """A required pattern slot was left unbound."""


class AgreementUnsatisfiable(ValgenError):
    """No consistent feature assignment exists for a noun group."""


# --- generation -------------------------------------------------------------

class EmptyPackageSelection(ValgenError):
    """A generation request selected no packages for a required slot."""


class EmptyCorpus(ValgenError):
    """The training corpus contains no tokens."""
