from ._circlekit import (
    CirclekitError,
    ConnectivityClass,
    ConnectivityReport,
    Counterexample,
    Graph,
    GraphVerdict,
    LocalEquivalenceOrbit,
    ObstructionWitness,
    RecognitionCertificate,
    Split,
    TwinPair,
    VerificationReport,
    Word,
    assemble_disconnected,
    bouchet_obstructions,
    bw3,
    canonical_label,
    complete_bipartite,
    complete_graph,
    component_count,
    components,
    connectivity_class,
    connectivity_name,
    contains_induced,
    cubic_circle_sweep,
    cycle_graph,
    cycle_word,
    cyclically_equivalent,
    default_worker_count,
    delete_vertex,
    disjoint_twin_pair_couples,
    enumerate_cubic,
    enumerate_realizations,
    find_split,
    format_graph6,
    has_two_disjoint_twin_pairs,
    ingest_graph6,
    interlacement,
    is_connected,
    is_isomorphic,
    is_prime,
    is_regular,
    join_single_edge,
    local_complement,
    local_equivalence_orbit,
    obstruction_free,
    parse_graph6,
    path_graph,
    recognize,
    simple_splits,
    split_lc_commutes,
    standard_graph,
    twin_pairs,
    validate_split,
    verdict_csv,
    verify_cycle_word_uniqueness,
    verify_no_prime,
    verify_realization,
    verify_three_connected_classification,
    verify_twin_theorem,
    wheel,
)

__all__ = [name for name in dir() if not name.startswith("_")]
