# coding=utf-8
"""Ground-truth fixtures built from module categories.

.. code-block:: python

    from triangulated_quotient.catalog import nakayama_stable, oracle_stable_hom

    category, triangulation = nakayama_stable(4, 2)
    assert category.hom_dim_names('M1', 'M3') == oracle_stable_hom(4, 2, 1, 3)[0]
"""
from .module import ModuleRep
from .stable import StableModuleCategory
from .nakayama import nakayama_category, nakayama_stable, syzygy, tau_orbit
from .hereditary import a2_category, a2_costable
from .oracle import oracle_stable_hom, oracle_table, oracle_syzygy, \
    oracle_costable_end

CATALOG_KINDS = ('nakayama', 'a2_costable')


def catalog_stable(provenance):
    """Rebuild the StableModuleCategory described by a provenance dictionary.

    Args:
        provenance: A dictionary like {"kind": "nakayama", "n": 4, "p": 2}.

    Returns:
        A StableModuleCategory.
    """
    kind = provenance.get('kind')
    if kind == 'nakayama':
        return nakayama_category(provenance['n'], provenance['p'])
    if kind == 'a2_costable':
        return a2_category(provenance['p'])
    raise ValueError('Unrecognized catalog kind "{}". Choose from {}.'.format(
        kind, CATALOG_KINDS))


def catalog_cone_builder(category):
    """Get the standard triangle construction for a category built by the catalog.

    Returns:
        A function from a Mor to a Triangle in the category or None if the
        category has no catalog provenance.
    """
    if not category.provenance:
        return None
    stable = catalog_stable(category.provenance)
    if stable.names != category.indecomposables:
        raise ValueError('Category on {} does not match its catalog provenance '
                         'on {}.'.format(category.indecomposables, stable.names))
    return stable.cone_builder(category)
