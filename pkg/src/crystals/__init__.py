"""Integrable crystals through the Littelmann path model, with tensor
retractions, restriction to Levi subgroups, and an independent
character-formula oracle that every output is checked against."""

from .root_data import (
    RootDatum,
    InputError,
    GuardError,
    InternalError,
    build_datum,
    cartan_matrix,
    pairing,
    reflect,
    apply_word,
    dominant_representative,
    root_coords,
    dominance_leq,
    height,
    positive_roots,
    langlands_dual,
    levi_datum,
    central_class,
    QuotientClass,
)
from .paths import (
    straight_path,
    string_data,
    root_operator,
    raise_path,
    lower_path,
    path_weight,
    normalize_path,
    path_to_json,
    path_from_json,
)
from .crystal_graph import (
    Crystal,
    DictCrystal,
    build_crystal,
    character,
    decompose,
    check_normal_crystal,
    crystal_to_json,
    crystal_to_dot,
)
from .tensor import (
    TensorCrystal,
    CrystalMap,
    tensor,
    retraction,
    verify_morphism,
    closed_family_certificate,
)
from .branching import (
    BranchResult,
    branch,
    levi_ceiling,
    branching_support,
    component_bijection_check,
    string_structure_check,
    embedding_bounds_check,
)
from .characters import (
    CharacterTable,
    weyl_dim,
    freudenthal,
    klimyk,
    branch_by_characters,
    is_weight,
)
from .worked_examples import (
    repellent_dim,
    gl2_slice_check,
    gl3_branch_vector_check,
    run_examples,
)
from .properties import run_properties

__version__ = "0.1.0"
