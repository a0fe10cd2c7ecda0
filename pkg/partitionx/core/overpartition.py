# Copyright (c) 2023-2024 partitionx developers

# This library is free software: you can redistribute it and/or
# modify it under the terms of the GNU Lesser General Public
# License as published by the Free Software Foundation version 3.
#
# This library is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the GNU
# Lesser General Public License for more details.
#
# You should have received a copy of the GNU Lesser General Public
# License along with this library.  If not, see <http://www.gnu.org/licenses/>.

"""Partitions and overpartitions in part-multiplicity form.

A partition is held as a map from part to multiplicity, e.g.
``(7, 5, 5, 2, 2, 2, 1)`` is ``<1^1 2^3 5^2 7^1>``.
An overpartition allows negative multiplicities, a negative multiplicity
marking an overline on the first occurrence of the part.

Both types are immutable. The stored map is zero-free and ordered
ascending by part, so equality is structural.
"""
import re
from collections.abc import Mapping

from partitionx.core.errors import ParseError, NonCanonicalError
from partitionx.core.util import is_positive_int, is_int


class BaseMultiplicities(Mapping):
    """Base class of :class:`Partition` and :class:`Overpartition`

    Instances behave as read-only mappings from parts to multiplicities.
    Missing parts raise :class:`KeyError` as with any mapping;
    use :meth:`multiplicity` to read 0 for absent parts.
    """
    __slots__ = ("_data", "_hash")

    def __init__(self, multiplicities=None):

        if isinstance(multiplicities, str):
            multiplicities = parse(multiplicities)._data

        if multiplicities is None:
            items = ()
        elif isinstance(multiplicities, Mapping):
            items = multiplicities.items()
        else:
            items = multiplicities

        data = {}
        for part, mult in items:
            if not is_positive_int(part):
                raise NonCanonicalError("nonpositive part %r" % (part,))
            if not is_int(mult):
                raise NonCanonicalError(
                    "multiplicity of part %s must be an integer" % part)
            if mult == 0:
                raise NonCanonicalError("zero multiplicity of part %s" % part)
            if part in data:
                raise NonCanonicalError("duplicate part %s" % part)
            data[int(part)] = int(mult)

        self._check_sign(data)
        self._data = {k: data[k] for k in sorted(data)}
        self._hash = None

    @classmethod
    def _from_canonical(cls, data):
        """Create an instance from a zero-free dict, sorting its keys"""
        obj = cls.__new__(cls)
        obj._data = {k: data[k] for k in sorted(data)}
        obj._hash = None
        return obj

    def _check_sign(self, data):
        pass

    # ----- Mapping protocol

    def __getitem__(self, part):
        return self._data[part]

    def __iter__(self):
        return iter(self._data)

    def __len__(self):
        return len(self._data)

    def __contains__(self, part):
        return part in self._data

    def __eq__(self, other):
        if isinstance(other, BaseMultiplicities):
            return self._data == other._data
        return NotImplemented

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(tuple(self._data.items()))
        return self._hash

    def __bool__(self):
        return bool(self._data)

    def __str__(self):
        return format_text(self)

    def __repr__(self):
        return "%s(%r)" % (type(self).__name__, format_text(self))

    def __reduce__(self):
        return (type(self), (self._data,))

    # ----- Statistics

    def multiplicity(self, part):
        """Multiplicity of ``part``, 0 if ``part`` is absent"""
        return self._data.get(part, 0)

    @property
    def parts(self):
        """Distinct parts in ascending order"""
        return tuple(self._data)

    @property
    def size(self):
        """Sum of parts, overlined parts counted by their absolute value"""
        return sum(i * abs(m) for i, m in self._data.items())

    @property
    def length(self):
        """Number of parts, overlined parts included"""
        return sum(abs(m) for m in self._data.values())

    # ----- Group operations

    def __mul__(self, other):
        if not isinstance(other, BaseMultiplicities):
            return NotImplemented
        return _multiply(self, other)

    def __truediv__(self, other):
        if not isinstance(other, BaseMultiplicities):
            return NotImplemented
        return _multiply(self, inverse(other))

    def __invert__(self):
        return inverse(self)

    def __pow__(self, k):
        if not is_int(k):
            return NotImplemented
        return power(self, k)


class Partition(BaseMultiplicities):
    """An integer partition ``<1^m_1 2^m_2 ...>`` with all ``m_i >= 1``

    Args:
        multiplicities: A mapping or an iterable of ``(part, multiplicity)``
            pairs, or a ``<...>`` literal.

    Example:
        >>> Partition({1: 1, 2: 3, 5: 2, 7: 1}) == Partition.from_parts(
        ...     (7, 5, 5, 2, 2, 2, 1))
        True
    """
    __slots__ = ()

    def _check_sign(self, data):
        for part, mult in data.items():
            if mult < 0:
                raise NonCanonicalError(
                    "negative multiplicity of part %s in a partition" % part)

    @classmethod
    def from_parts(cls, parts):
        """Create a partition from a list of parts in any order"""
        data = {}
        for part in parts:
            if not is_positive_int(part):
                raise NonCanonicalError("nonpositive part %r" % (part,))
            data[part] = data.get(part, 0) + 1
        return cls._from_canonical(data)

    def to_parts(self):
        """Parts as a non-increasing tuple"""
        return tuple(
            part for part in reversed(self._data)
            for _ in range(self._data[part]))


class Overpartition(BaseMultiplicities):
    """An overpartition ``<1^mu_1 2^mu_2 ...>`` with nonzero integer ``mu_i``

    ``mu_i < 0`` if and only if part ``i`` carries an overline.

    Args:
        multiplicities: A mapping or an iterable of ``(part, multiplicity)``
            pairs, or a ``<...>`` literal.
    """
    __slots__ = ()

    @property
    def overlined(self):
        """Overlined parts in ascending order"""
        return tuple(i for i, m in self._data.items() if m < 0)

    def is_partition(self):
        """True if no part is overlined"""
        return all(m > 0 for m in self._data.values())


EMPTY_PARTITION = Partition()
EMPTY = Overpartition()


class RationalForm:
    """Rational form ``numerator / denominator`` of an overpartition

    ``numerator`` holds the parts with positive multiplicities and
    ``denominator`` the parts with negative multiplicities, negated.
    The supports of the two partitions are disjoint.
    """
    __slots__ = ("numerator", "denominator")

    def __init__(self, numerator=EMPTY_PARTITION,
                 denominator=EMPTY_PARTITION):
        numerator = to_partition(numerator)
        denominator = to_partition(denominator)
        common = set(numerator).intersection(denominator)
        if common:
            raise NonCanonicalError(
                "numerator and denominator share parts %s"
                % sorted(common))
        self.numerator = numerator
        self.denominator = denominator

    def __iter__(self):
        yield self.numerator
        yield self.denominator

    def __eq__(self, other):
        if isinstance(other, RationalForm):
            return tuple(self) == tuple(other)
        return NotImplemented

    def __hash__(self):
        return hash(tuple(self))

    def __repr__(self):
        return "RationalForm(%s, %s)" % (
            format_text(self.numerator), format_text(self.denominator))


# --------------------------------------------------------------------------
# Products and group structure

def _multiply(a, b):
    data = dict(a._data)
    for part, mult in b._data.items():
        total = data.get(part, 0) + mult
        if total:
            data[part] = total
        else:
            del data[part]

    if isinstance(a, Partition) and isinstance(b, Partition):
        return Partition._from_canonical(data)
    return Overpartition._from_canonical(data)


def multiply_partitions(a, b):
    """Product of two partitions by summing multiplicities

    >>> multiply_partitions(Partition("<1^1 2^1>"), Partition("<2^2 3^1>"))
    Partition('<1^1 2^3 3^1>')
    """
    return _multiply(to_partition(a), to_partition(b))


def multiply(a, b):
    """Product of two overpartitions

    Multiplicities are added part by part and parts whose sum is 0 are
    dropped.

    >>> multiply(Overpartition("<1^2 2^-3 3^1>"), Overpartition("<2^3>"))
    Overpartition('<1^2 3^1>')
    """
    return _multiply(to_overpartition(a), to_overpartition(b))


def product(values):
    """Product of an iterable of overpartitions, ``<>`` if empty"""
    result = EMPTY
    for value in values:
        result = _multiply(result, to_overpartition(value))
    return result


def inverse(a):
    """Inverse of ``a``, every multiplicity negated"""
    a = to_overpartition(a)
    return Overpartition._from_canonical(
        {part: -mult for part, mult in a._data.items()})


def power(a, k):
    """``a`` raised to the integer power ``k``

    A partition raised to a nonnegative power stays a partition.
    """
    if not is_int(k):
        raise TypeError("exponent must be an integer, got %r" % (k,))
    if k == 0:
        return EMPTY_PARTITION if isinstance(a, Partition) else EMPTY
    data = {part: mult * k for part, mult in a._data.items()}
    if isinstance(a, Partition) and k > 0:
        return Partition._from_canonical(data)
    return Overpartition._from_canonical(data)


def to_overpartition(a):
    """Inject a partition into the overpartitions

    Literals are parsed; overpartitions are returned as is.
    """
    if isinstance(a, Overpartition):
        return a
    elif isinstance(a, BaseMultiplicities):
        return Overpartition._from_canonical(a._data)
    elif isinstance(a, str):
        return parse(a)
    else:
        return Overpartition(a)


def to_partition(a):
    """Convert ``a`` to a partition

    Raises:
        NonCanonicalError: if any multiplicity is negative.
    """
    if isinstance(a, Partition):
        return a
    elif isinstance(a, BaseMultiplicities):
        negative = [i for i, m in a._data.items() if m < 0]
        if negative:
            raise NonCanonicalError(
                "overlined parts %s have no partition counterpart" % negative)
        return Partition._from_canonical(a._data)
    elif isinstance(a, str):
        return to_partition(parse(a))
    else:
        return Partition(a)


def divides(a, b):
    """True if partition ``a`` is a sub-multiset of partition ``b``"""
    a, b = to_partition(a), to_partition(b)
    return all(b.multiplicity(i) >= m for i, m in a.items())


def quotient_partition(b, a):
    """Return the partition ``b / a`` when ``a`` divides ``b``"""
    if not divides(a, b):
        raise NonCanonicalError("%s does not divide %s" % (a, b))
    return to_partition(_multiply(to_partition(b), inverse(to_partition(a))))


# --------------------------------------------------------------------------
# Rational form

def to_rational_form(a):
    """Split ``a`` into the rational form ``numerator / denominator``

    >>> to_rational_form(Overpartition("<1^2 2^-3 3^1>"))
    RationalForm(<1^2 3^1>, <2^3>)
    """
    a = to_overpartition(a)
    form = RationalForm.__new__(RationalForm)
    form.numerator = Partition._from_canonical(
        {i: m for i, m in a._data.items() if m > 0})
    form.denominator = Partition._from_canonical(
        {i: -m for i, m in a._data.items() if m < 0})
    return form


def from_rational_form(numerator, denominator=None):
    """Merge a rational form back into an overpartition

    Accepts a :class:`RationalForm` or a pair of partitions.

    Raises:
        NonCanonicalError: if the supports of the partitions overlap.
    """
    if denominator is None:
        if isinstance(numerator, RationalForm):
            form = numerator
        elif isinstance(numerator, (tuple, list)) and len(numerator) == 2:
            form = RationalForm(*numerator)
        else:
            raise NonCanonicalError(
                "expected a RationalForm or a pair of partitions, got %r"
                % (numerator,))
    else:
        form = RationalForm(numerator, denominator)

    data = dict(form.numerator._data)
    data.update((i, -m) for i, m in form.denominator._data.items())
    return Overpartition._from_canonical(data)


# --------------------------------------------------------------------------
# Overline lists

def _overline_error(index, message):
    err = NonCanonicalError(message)
    err.index = index
    return err


def overline_list_decode(parts):
    """Overpartition from a list of ``(value, overlined)`` pairs

    The list must be non-increasing and only the first occurrence of
    a part size may be overlined.

    >>> overline_list_decode([(3, True), (2, False), (2, False), (1, False)])
    Overpartition('<1^1 2^2 3^-1>')

    Raises:
        NonCanonicalError: with ``index`` set to the offending item.
    """
    counts = {}
    overlined = set()
    last = None
    for index, (value, flag) in enumerate(parts):
        if not is_positive_int(value):
            raise _overline_error(index, "nonpositive part %r" % (value,))
        if last is not None and value > last:
            raise _overline_error(
                index,
                "parts must be non-increasing, %s follows %s" % (value, last))
        if flag:
            if value in overlined:
                raise _overline_error(
                    index, "part %s is overlined twice" % value)
            if value in counts:
                raise _overline_error(
                    index,
                    "overline on a non-first occurrence of part %s" % value)
            overlined.add(value)
        counts[value] = counts.get(value, 0) + 1
        last = value

    return Overpartition._from_canonical(
        {i: -m if i in overlined else m for i, m in counts.items()})


def overline_list_encode(a):
    """List of ``(value, overlined)`` pairs of ``a``, non-increasing"""
    a = to_overpartition(a)
    result = []
    for part in reversed(a._data):
        mult = a._data[part]
        result.append((part, mult < 0))
        result.extend((part, False) for _ in range(abs(mult) - 1))
    return result


_LIST_ITEM = re.compile(r"\s*(~?)(0|[1-9][0-9]*)\s*$")


def overline_list_parse(text):
    """Parse the ASCII overline-list notation such as ``~3,2,2,2,1,1``

    Enclosing parentheses are optional. The empty list is ``()``;
    blank text is an error.
    """
    body = text.strip()
    if not body:
        raise ParseError("empty literal, use () or <>", text, 0)
    offset = text.find(body)
    if body.startswith("(") and body.endswith(")"):
        body = body[1:-1]
        offset += 1
        if not body.strip():
            return EMPTY

    parts = []
    starts = []
    pos = offset
    for item in body.split(","):
        m = _LIST_ITEM.match(item)
        if not m:
            raise ParseError("expected [~]part", text, pos)
        value = int(m.group(2))
        if value == 0:
            raise ParseError("nonpositive part", text, pos + m.start(2))
        parts.append((value, bool(m.group(1))))
        starts.append(pos + m.start(1))
        pos += len(item) + 1

    try:
        return overline_list_decode(parts)
    except NonCanonicalError as err:
        raise ParseError(str(err), text, starts[err.index]) from err


def overline_list_format(a):
    """Format ``a`` in the ASCII overline-list notation, ``()`` if empty"""
    return ",".join(
        ("~%d" if flag else "%d") % value
        for value, flag in overline_list_encode(a)) or "()"


# --------------------------------------------------------------------------
# Text and JSON forms

_TERM = re.compile(r"(0|[1-9][0-9]*)\^(-?(?:0|[1-9][0-9]*))")


def parse(text):
    """Parse a ``<part^mult part^mult ...>`` literal into an overpartition

    ``<>`` is the empty overpartition.

    Raises:
        ParseError: on a syntax error, a duplicate part, a zero
            multiplicity or a nonpositive part.
    """
    if not isinstance(text, str):
        raise TypeError("text must be a str, got %r" % (text,))

    if not text.startswith("<"):
        raise ParseError("expected '<'", text, 0)

    data = {}
    pos = 1
    if text.startswith(">", pos):
        pos += 1
    else:
        while True:
            m = _TERM.match(text, pos)
            if not m:
                raise ParseError("expected part^multiplicity", text, pos)
            part, mult = int(m.group(1)), int(m.group(2))
            if part == 0:
                raise ParseError("nonpositive part", text, m.start(1))
            if mult == 0:
                raise ParseError("zero multiplicity", text, m.start(2))
            if part in data:
                raise ParseError("duplicate part %s" % part, text, m.start(1))
            data[part] = mult
            pos = m.end()
            if text.startswith(" ", pos):
                pos += 1
            elif text.startswith(">", pos):
                pos += 1
                break
            else:
                raise ParseError("expected ' ' or '>'", text, pos)

    if pos != len(text):
        raise ParseError("unexpected trailing text", text, pos)

    return Overpartition._from_canonical(data)


def parse_any(text):
    """Parse either grammar, ``<...>`` literals start with ``<``"""
    stripped = text.strip()
    if stripped.startswith("<"):
        return parse(stripped)
    return overline_list_parse(text)


def format_text(a):
    """Canonical ``<...>`` text of ``a``, parts ascending"""
    return "<" + " ".join(
        "%d^%d" % item for item in a._data.items()) + ">"


def to_json_obj(a):
    """JSON object mapping decimal part strings to multiplicities"""
    return {str(part): mult for part, mult in a._data.items()}


def from_json_obj(obj):
    """Overpartition from the object made by :func:`to_json_obj`"""
    if not isinstance(obj, Mapping):
        raise NonCanonicalError("expected a JSON object, got %r" % (obj,))
    items = []
    for key, mult in obj.items():
        if not (isinstance(key, str) and key.isdigit()):
            raise NonCanonicalError("part key %r is not decimal" % (key,))
        items.append((int(key), mult))
    return Overpartition(items)
