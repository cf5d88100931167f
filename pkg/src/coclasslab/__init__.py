"""coclasslab: exact computations with finite metabelian 3-groups whose
abelianization is elementary bicyclic (3,3).

The package realizes groups of order up to 3^8 from finite presentations,
computes their Artin patterns (transfer targets and kernels), implements
the closed-form coclass rule and its companion predictions with all
exceptional cases, models the predicted normal-subgroup lattice, and
classifies number-field records by the coclass of their second 3-class
group.
"""

from .invariants import (
    AbelianType,
    TRIVIAL,
    ati,
    ati_from_order_counts,
    direct_product,
    format_log,
    nearly_homocyclic,
    parse_log,
)
from .presentations import Presentation, parse_presentation, parse_word
from .engine import ConcreteGroup, GroupDescriptor, Subgroup, descriptor, realize
from .artin import ArtinPattern, artin_pattern, equivalent, kappa_equivalent, transfer
from .catalog import (
    CatalogEntry,
    PresentationParams,
    catalog_ids,
    lookup,
    maximal_class_presentation,
    parametrized_presentation,
)
from .rules import (
    CoclassVerdict,
    TreeTag,
    coclass_from_class_numbers,
    commutator_structure,
    exceptions_table,
    irregularity_from_params,
    predict_ttt,
)
from .lattice import (
    LatticeModel,
    central_series_spec,
    emit_diagram,
    maximal_class_lattice,
    normal_count,
    predicted_lattice,
    verify_lattice,
)
from .fields import (
    FieldRecord,
    classify,
    discriminant_from_conductor,
    load_records,
    minimal_table,
    save_records,
)

__version__ = "0.1.0"
