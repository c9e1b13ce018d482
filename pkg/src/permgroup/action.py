"""
Possibly non-faithful actions of an abstract permutation group on points.
"""

from dataclasses import dataclass
from typing import Dict, Optional, Sequence

from ..config.yaml_loader import Budgets
from ..utils.errors import ValidationError
from .group import PermutationGroup, generate_group
from .permutation import Permutation


@dataclass
class GroupAction:
    """
    A group ``source`` (acting faithfully on its own points) together with a
    homomorphism to permutations of ``degree`` points, given on generators.
    """
    source: PermutationGroup
    degree: int
    images: Dict[Permutation, Permutation]

    @classmethod
    def natural(cls, group: PermutationGroup) -> "GroupAction":
        return cls(group, group.degree, {g: g for g in group.generators})

    @classmethod
    def from_generators(cls, source_degree: int, generators: Sequence[Permutation],
                        images: Sequence[Permutation], budgets: Optional[Budgets] = None) -> "GroupAction":
        """
        Build an action and check that the generator images define a homomorphism.

        Raises:
            ValidationError: If the assignment is not well defined
        """
        if len(generators) != len(images):
            raise ValidationError("need one image per generator")
        degrees = {p.degree for p in images}
        if len(degrees) > 1:
            raise ValidationError("generator images have different degrees")
        degree = degrees.pop() if degrees else 0
        source = generate_group(source_degree, generators, budgets)
        action = cls(source, degree, dict(zip(source.generators, images)))
        graph = action._graph(budgets)
        if graph.order != source.order:
            raise ValidationError(
                f"generator images do not define a homomorphism ({graph.order} pairs for a group of order {source.order})")
        return action

    def _graph(self, budgets: Optional[Budgets] = None) -> PermutationGroup:
        """Closure of the pairs ``(g, image(g))`` acting on the disjoint union of points."""
        d = self.source.degree
        pairs = [Permutation(g.images + tuple(d + x for x in self.images[g].images))
                 for g in self.source.generators]
        return generate_group(d + self.degree, pairs, budgets)

    def mapping(self, budgets: Optional[Budgets] = None) -> Dict[Permutation, Permutation]:
        """Image of every element of ``source``."""
        d = self.source.degree
        result = {}
        for pair in self._graph(budgets).elements:
            source_part = Permutation(pair.images[:d])
            result[source_part] = Permutation(tuple(x - d for x in pair.images[d:]))
        return result

    def action_image(self, budgets: Optional[Budgets] = None) -> PermutationGroup:
        """The faithful image group on ``degree`` points."""
        return PermutationGroup(self.degree, set(self.mapping(budgets).values()))

    def kernel(self, budgets: Optional[Budgets] = None) -> PermutationGroup:
        return PermutationGroup(
            self.source.degree, [g for g, img in self.mapping(budgets).items() if img.is_identity()])
