"""Tree-tree partitions of even plane triangulations and dual Hamilton cycles."""

try:
    from . import _barnette as _impl  # installed layout: extension inside the package
except ImportError:  # development layout: extension on PYTHONPATH
    import _barnette as _impl

BarnetteError = _impl.BarnetteError
brute_ham_cycles = _impl.brute_ham_cycles
brute_partitions = _impl.brute_partitions
catalog = _impl.catalog
catalog_names = _impl.catalog_names
check_hypothesis = _impl.check_hypothesis
expand_octahedral = _impl.expand_octahedral
from_planar_code = _impl.from_planar_code
from_rot1 = _impl.from_rot1
graph_info = _impl.graph_info
partition = _impl.partition
partition_to_ham = _impl.partition_to_ham
random_instance = _impl.random_instance
separating_triangles = _impl.separating_triangles
three_color = _impl.three_color
to_planar_code = _impl.to_planar_code
to_rot1 = _impl.to_rot1
verify_sweep = _impl.verify_sweep

__all__ = [
    "BarnetteError",
    "brute_ham_cycles",
    "brute_partitions",
    "catalog",
    "catalog_names",
    "check_hypothesis",
    "expand_octahedral",
    "from_planar_code",
    "from_rot1",
    "graph_info",
    "partition",
    "partition_to_ham",
    "random_instance",
    "separating_triangles",
    "three_color",
    "to_planar_code",
    "to_rot1",
    "verify_sweep",
]
