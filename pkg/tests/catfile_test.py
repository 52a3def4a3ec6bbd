# coding=utf-8
import json
import os

import pytest

from triangulated_quotient.approx import SubcatSpec
from triangulated_quotient.catfile import CategoryFile, CategoryFileError, check_keys


def _category_file(nakayama3):
    cat, triangulation = nakayama3
    return CategoryFile(cat, triangulation, {'D': SubcatSpec(cat, ['M2'])})


def test_category_file_init(nakayama3):
    """Test the initialization of CategoryFile and basic properties."""
    cat, triangulation = nakayama3
    cat_file = _category_file(nakayama3)
    str(cat_file)  # test the string representation

    assert cat_file.category is cat
    assert cat_file.triangulation is triangulation
    assert cat_file.subcats['D'].members == ('M2',)
    assert cat_file.quotient is None


def test_category_file_to_from_text(nakayama3):
    """Test the round trip of a CategoryFile through JSON text."""
    cat, triangulation = nakayama3
    text = _category_file(nakayama3).to_text()
    new_file = CategoryFile.from_text(text)
    assert new_file.category.indecomposables == cat.indecomposables
    assert new_file.category.hom_dims == cat.hom_dims
    assert new_file.category.provenance == cat.provenance
    assert len(new_file.triangulation) == len(triangulation)
    assert new_file.triangulation.cone_builder is not None
    assert new_file.subcats['D'] == SubcatSpec(new_file.category, ['M2'])
    assert new_file.to_text() == text


def test_category_file_to_from_file(nakayama3, tmp_path):
    """Test writing a CategoryFile to disk and reading it back."""
    cat_file = _category_file(nakayama3)
    path = cat_file.to_json('nakayama3', str(tmp_path))
    assert os.path.isfile(path)
    assert path.endswith('nakayama3.json')
    new_file = CategoryFile.from_file(path)
    assert new_file.to_dict() == cat_file.to_dict()

    with pytest.raises(CategoryFileError):
        CategoryFile.from_file(os.path.join(str(tmp_path), 'missing.json'))


def test_subcat_parsing(nakayama3):
    """Test the ways a subcategory can be named on the command line."""
    cat, _ = nakayama3
    cat_file = _category_file(nakayama3)
    assert cat_file.subcat('D').members == ('M2',)
    assert cat_file.subcat('all') == SubcatSpec.all(cat)
    assert cat_file.subcat('none').is_empty
    assert cat_file.subcat('').is_empty
    assert cat_file.subcat(' M2, M1 ').members == ('M1', 'M2')

    with pytest.raises(ValueError):
        cat_file.subcat('M9')


def test_malformed_json():
    """Test that malformed JSON reports its position."""
    text = '{\n  "format": 1,\n  oops\n}\n'
    with pytest.raises(CategoryFileError) as err:
        CategoryFile.from_text(text)
    assert err.value.line == 3
    assert err.value.column is not None
    assert 'line 3' in str(err.value)


def test_unknown_keys(nakayama3):
    """Test that unknown keys and formats are rejected."""
    cat, _ = nakayama3
    data = cat.to_dict()
    check_keys(data)

    with pytest.raises(CategoryFileError):
        check_keys(dict(data, colour='red'))
    with pytest.raises(CategoryFileError):
        check_keys(dict(data, format=2))
    hom = dict(data['hom'])
    hom['M1|M1'] = dict(hom['M1|M1'], rank=1)
    with pytest.raises(CategoryFileError):
        check_keys(dict(data, hom=hom))


def test_invalid_category_file(nakayama3):
    """Test that structural errors are reported as CategoryFileError."""
    cat, _ = nakayama3
    data = cat.to_dict()
    data.pop('catalog')
    data.pop('shift')
    data['triangles'] = []
    with pytest.raises(CategoryFileError) as err:
        CategoryFile.from_dict(data)
    assert 'shift' in str(err.value)

    data = cat.to_dict()
    data['identity'] = {'M1': [1, 1, 1]}
    with pytest.raises(CategoryFileError):
        CategoryFile.from_text(json.dumps(data))


def test_category_file_without_triangles(nakayama3):
    """Test that a bare presentation loads without a triangulation."""
    cat, _ = nakayama3
    data = cat.to_dict()
    data.pop('catalog')
    cat_file = CategoryFile.from_dict(data)
    assert cat_file.triangulation is None
    assert cat_file.category.shift is not None
