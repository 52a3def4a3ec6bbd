"""Collection of methods for type input checking."""
import re

import galois


def valid_name(value, input_name=''):
    """Check that a string is valid as the name of an indecomposable object."""
    try:
        illegal_match = re.search(r'[^.A-Za-z0-9_^-]', value)
    except TypeError:
        raise TypeError('Input {} must be a text string. Got {}: {}.'.format(
            input_name, type(value), value))
    assert illegal_match is None, 'Illegal character "{}" found in {}'.format(
        illegal_match.group(0), input_name)
    assert len(value) > 0, 'Input {} "{}" contains no characters.'.format(
        input_name, value)
    assert len(value) <= 100, 'Input {} "{}" must be less than 100 characters.'.format(
        input_name, value)
    return value


def name_tuple(value, input_name=''):
    """Check that a value is an iterable of valid names without duplicates."""
    if isinstance(value, str):
        value = (value,)
    try:
        names = tuple(valid_name(v, input_name) for v in value)
    except TypeError:
        raise TypeError('Input {} must be an iterable of text strings. '
                        'Got {}.'.format(input_name, type(value)))
    assert len(set(names)) == len(names), \
        'Input {} contains duplicated names: {}.'.format(input_name, names)
    return names


def int_in_range(value, mi=None, ma=None, input_name=''):
    """Check an integer value to be between minimum and maximum."""
    if isinstance(value, bool):
        raise TypeError('Input {} must be an integer. Got {}: {}.'.format(
            input_name, type(value), value))
    try:
        number = int(value)
    except (ValueError, TypeError):
        raise TypeError('Input {} must be an integer. Got {}: {}.'.format(
            input_name, type(value), value))
    assert number == value or isinstance(value, str), \
        'Input {} must be a whole number. Got {}.'.format(input_name, value)
    if mi is not None:
        assert number >= mi, 'Input integer {} must be at least {}. ' \
            'Got {}.'.format(input_name, mi, value)
    if ma is not None:
        assert number <= ma, 'Input integer {} must be at most {}. ' \
            'Got {}.'.format(input_name, ma, value)
    return number


def int_positive(value, input_name=''):
    """Check if an integer value is non-negative."""
    return int_in_range(value, 0, None, input_name)


def prime_modulus(value, input_name=''):
    """Check that a value is a prime number usable as a field modulus."""
    number = int_in_range(value, 2, None, input_name)
    assert galois.is_prime(number), \
        'Input {} must be a prime number. Got {}.'.format(input_name, value)
    return number
