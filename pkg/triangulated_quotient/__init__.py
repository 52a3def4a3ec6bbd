"""triangulated-quotient library.

Finite k-linear right triangulated categories, their approximation ideals,
mutation pairs and quotient categories Z/D with the induced shift and triangles.

.. code-block:: python

    from triangulated_quotient.catalog import nakayama_stable
    from triangulated_quotient.approx import SubcatSpec
    from triangulated_quotient.quotient import build_quotient, induced_triangulation

    category, triangulation = nakayama_stable(4, 2)
    z_sub = SubcatSpec.all(category)
    d_sub = SubcatSpec(category, ['M2'])
    quotient = build_quotient(category, z_sub, d_sub, triangulation, mode='pair')
    quotient.survivors  # ('M1', 'M3')
"""
