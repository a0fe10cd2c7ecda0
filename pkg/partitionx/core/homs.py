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

"""Statistic homomorphisms and subgroups of the overpartition group

Every subgroup family here is the kernel of a homomorphism out of the
overpartitions. :func:`quotient_image` evaluates that homomorphism,
so two overpartitions lie in the same coset exactly when their images
agree.
"""
from fractions import Fraction

from partitionx.core.errors import SubgroupSpecError
from partitionx.core.overpartition import (
    Overpartition,
    inverse,
    to_overpartition,
    to_partition,
    to_rational_form,
    _multiply
)
from partitionx.core.util import is_int, is_positive_int, to_part_set

SIZE_KERNEL = "size-kernel"
LENGTH_KERNEL = "length-kernel"
PARTS_IN = "parts-in"
PARTS_AVOIDING = "parts-avoiding"
LENGTH_MOD = "length-mod"

KINDS = (SIZE_KERNEL, LENGTH_KERNEL, PARTS_IN, PARTS_AVOIDING, LENGTH_MOD)


class SubgroupSpec:
    """Descriptor of one of the subgroup families

    =================  ================================  ==========
    kind               members                           parameter
    =================  ================================  ==========
    ``size-kernel``    oversize is 0
    ``length-kernel``  overlength is 0
    ``parts-in``       every part lies in ``S``          ``S``
    ``parts-avoiding`` no part lies in ``S``             ``S``
    ``length-mod``     ``m`` divides the overlength      ``m``
    =================  ================================  ==========

    Use the class methods to create instances.
    """
    __slots__ = ("kind", "S", "m")

    def __init__(self, kind, S=None, m=None):
        if kind not in KINDS:
            raise SubgroupSpecError("unknown subgroup kind %r" % (kind,))

        if kind in (PARTS_IN, PARTS_AVOIDING):
            if S is None:
                raise SubgroupSpecError("%s requires S" % kind)
            try:
                S = to_part_set(S)
            except (TypeError, ValueError) as err:
                raise SubgroupSpecError(str(err)) from err
            if not S:
                raise SubgroupSpecError("S must not be empty")
        else:
            S = None

        if kind == LENGTH_MOD:
            if not is_positive_int(m):
                raise SubgroupSpecError(
                    "m must be a positive integer, got %r" % (m,))
            m = int(m)
        else:
            m = None

        self.kind = kind
        self.S = S
        self.m = m

    @classmethod
    def size_kernel(cls):
        return cls(SIZE_KERNEL)

    @classmethod
    def length_kernel(cls):
        return cls(LENGTH_KERNEL)

    @classmethod
    def parts_in(cls, S):
        return cls(PARTS_IN, S=S)

    @classmethod
    def parts_avoiding(cls, S):
        return cls(PARTS_AVOIDING, S=S)

    @classmethod
    def length_mod(cls, m):
        return cls(LENGTH_MOD, m=m)

    @classmethod
    def from_args(cls, kind, arg=None):
        """Create a spec from command-line strings

        ``arg`` is a comma-separated set for the parts families and
        an integer for ``length-mod``.
        """
        if kind in (PARTS_IN, PARTS_AVOIDING):
            if not arg:
                raise SubgroupSpecError("%s requires S" % kind)
            try:
                S = [int(s) for s in arg.split(",") if s.strip()]
            except ValueError:
                raise SubgroupSpecError("invalid S %r" % arg) from None
            return cls(kind, S=S)
        elif kind == LENGTH_MOD:
            try:
                m = int(arg)
            except (TypeError, ValueError):
                raise SubgroupSpecError("invalid m %r" % (arg,)) from None
            return cls(kind, m=m)
        else:
            return cls(kind)

    def to_json(self):
        """JSON object ``{"kind": ..., "S": [...], "m": ...}``

        ``S`` and ``m`` appear only for the kinds that take them.
        """
        result = {"kind": self.kind}
        if self.S is not None:
            result["S"] = sorted(self.S)
        if self.m is not None:
            result["m"] = self.m
        return result

    @classmethod
    def from_json(cls, obj):
        if not isinstance(obj, dict) or "kind" not in obj:
            raise SubgroupSpecError("expected an object with 'kind'")
        return cls(obj["kind"], S=obj.get("S"), m=obj.get("m"))

    def __eq__(self, other):
        if isinstance(other, SubgroupSpec):
            return (self.kind, self.S, self.m) == (other.kind, other.S, other.m)
        return NotImplemented

    def __hash__(self):
        return hash((self.kind, self.S, self.m))

    def __repr__(self):
        if self.S is not None:
            return "SubgroupSpec(%r, S=%s)" % (self.kind, sorted(self.S))
        elif self.m is not None:
            return "SubgroupSpec(%r, m=%s)" % (self.kind, self.m)
        return "SubgroupSpec(%r)" % self.kind


# --------------------------------------------------------------------------
# Statistics

def oversize(a):
    """Signed size ``sum i * mu_i``"""
    return sum(i * m for i, m in to_overpartition(a).items())


def overlength(a):
    """Signed length ``sum mu_i``"""
    return sum(to_overpartition(a).values())


def overnorm(a):
    """Signed norm ``prod i ** mu_i`` as a :class:`Fraction`"""
    numerator = 1
    denominator = 1
    for i, m in to_overpartition(a).items():
        if m > 0:
            numerator *= i ** m
        else:
            denominator *= i ** -m
    return Fraction(numerator, denominator)


def partition_norm(a):
    """Product of the parts of a partition, ``prod i ** m_i``"""
    result = 1
    for i, m in to_partition(a).items():
        result *= i ** m
    return result


def multiplicity_of(k, a):
    """Multiplicity ``mu_k`` of part ``k`` in ``a``, 0 if absent"""
    if not is_positive_int(k):
        raise ValueError("k must be a positive integer, got %r" % (k,))
    return to_overpartition(a).multiplicity(k)


def delete_parts_in(S, a):
    """Remove every part in the finite set ``S`` from ``a``"""
    S = to_part_set(S)
    return delete_parts_where(S.__contains__, a)


def delete_parts_where(predicate, a):
    """Remove every part ``i`` of ``a`` with ``predicate(i)`` true

    ``predicate`` may describe an infinite set of parts.
    """
    a = to_overpartition(a)
    return Overpartition._from_canonical(
        {i: m for i, m in a.items() if not predicate(i)})


def overlength_mod(m, a):
    """Overlength of ``a`` modulo ``m`` in ``range(m)``"""
    if not is_positive_int(m):
        raise ValueError("m must be a positive integer, got %r" % (m,))
    return overlength(a) % m


def stats(a):
    """Dict of the statistics of ``a``

    Keys are ``oversize``, ``overlength``, ``overnorm``, ``size``,
    ``length``, ``numerator_size``, ``denominator_size``,
    ``numerator_length``, ``denominator_length`` and ``multiplicities``.
    """
    a = to_overpartition(a)
    form = to_rational_form(a)
    return {
        "oversize": oversize(a),
        "overlength": overlength(a),
        "overnorm": overnorm(a),
        "size": a.size,
        "length": a.length,
        "numerator_size": form.numerator.size,
        "denominator_size": form.denominator.size,
        "numerator_length": form.numerator.length,
        "denominator_length": form.denominator.length,
        "multiplicities": dict(a.items())
    }


# --------------------------------------------------------------------------
# Subgroups and cosets

def is_member(a, g):
    """True if ``a`` belongs to the subgroup described by ``g``"""
    a = to_overpartition(a)
    kind = g.kind
    if kind == SIZE_KERNEL:
        return oversize(a) == 0
    elif kind == LENGTH_KERNEL:
        return overlength(a) == 0
    elif kind == PARTS_IN:
        return all(i in g.S for i in a)
    elif kind == PARTS_AVOIDING:
        return not any(i in g.S for i in a)
    elif kind == LENGTH_MOD:
        return overlength(a) % g.m == 0
    else:
        raise RuntimeError("must not happen")


def is_member_where(a, predicate, avoiding=False):
    """Membership for a set of parts given by ``predicate``

    With ``avoiding`` false, True if every part of ``a`` satisfies
    ``predicate``; otherwise True if no part does.
    """
    a = to_overpartition(a)
    if avoiding:
        return not any(predicate(i) for i in a)
    return all(predicate(i) for i in a)


def same_coset(a, b, g):
    """True if ``a * b**-1`` lies in the subgroup ``g``"""
    return is_member(
        _multiply(to_overpartition(a), inverse(to_overpartition(b))), g)


def quotient_image(a, g):
    """Image of ``a`` under the homomorphism whose kernel is ``g``

    ================== ==========================================
    kind               image
    ================== ==========================================
    ``size-kernel``    oversize, an int
    ``length-kernel``  overlength, an int
    ``parts-in``       ``a`` with the parts in ``S`` deleted
    ``parts-avoiding`` ``a`` with the parts outside ``S`` deleted
    ``length-mod``     overlength modulo ``m`` in ``range(m)``
    ================== ==========================================
    """
    a = to_overpartition(a)
    kind = g.kind
    if kind == SIZE_KERNEL:
        return oversize(a)
    elif kind == LENGTH_KERNEL:
        return overlength(a)
    elif kind == PARTS_IN:
        return delete_parts_in(g.S, a)
    elif kind == PARTS_AVOIDING:
        return delete_parts_where(lambda i: i not in g.S, a)
    elif kind == LENGTH_MOD:
        return overlength_mod(g.m, a)
    else:
        raise RuntimeError("must not happen")


def coset_representative(image, g):
    """Canonical member of the coset of ``g`` whose image is ``image``

    ``<1^k>`` represents the coset with image ``k`` for the kernels of
    oversize, overlength and overlength modulo ``m``. For the parts
    families the image is itself the representative.
    """
    kind = g.kind
    if kind in (SIZE_KERNEL, LENGTH_KERNEL, LENGTH_MOD):
        if not is_int(image):
            raise ValueError("image must be an integer, got %r" % (image,))
        if kind == LENGTH_MOD:
            image %= g.m
        return Overpartition._from_canonical({1: image} if image else {})
    else:
        rep = to_overpartition(image)
        if quotient_image(rep, g) != rep:
            raise ValueError("%s is not an image of %r" % (rep, g))
        return rep
