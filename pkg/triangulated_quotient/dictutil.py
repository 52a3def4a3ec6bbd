# coding=utf-8
"""Utilities to convert any dictionary with a "type" key to Python objects."""
from .decision import Decision
from .report import Report, CheckResult
from .catalog.module import ModuleRep
from .quotient.presentation import QuotientPresentation


def dict_to_object(data, category=None, raise_exception=True):
    """Re-serialize a dictionary of any object of this package.

    Args:
        data (dict): A dictionary of a Report, CheckResult, Decision, ModuleRep
            or QuotientPresentation.
        category: The base CategoryPresentation, required for dictionaries of
            objects that live in a category. (Default: None).
        raise_exception (bool): Boolean to note whether an exception should be
            raised if the object type is not recognized. (Default: True).

    Returns:
        A Python object derived from the input dictionary.
    """
    standalone = {
        'Report': Report.from_dict,
        'CheckResult': CheckResult.from_dict,
        'Decision': Decision.from_dict,
        'ModuleRep': ModuleRep.from_dict
    }
    in_category = {
        'QuotientPresentation': QuotientPresentation.from_dict
    }

    try:
        obj_type = data['type']
    except KeyError:
        raise ValueError('Dictionary lacks required "type" key.')

    if obj_type in standalone:
        return standalone[obj_type](data)
    if obj_type in in_category:
        if category is None:
            raise ValueError('A {} dictionary needs its base category.'.format(obj_type))
        return in_category[obj_type](category, data)
    if raise_exception:
        raise ValueError('{} is not a recognized triangulated_quotient type'.format(
            obj_type))
    return None
