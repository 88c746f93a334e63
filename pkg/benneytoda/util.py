import csv
import json
import numbers
from fractions import Fraction

import numpy as np


def encode_value(value):
    """ JSON-ready form of a result value. Fractions render as "p/q",
    complex numbers as [re, im], enums by value. """
    if isinstance(value, bool) or value is None or isinstance(value, str):
        return value
    if isinstance(value, Fraction):
        if value.denominator == 1:
            return str(value.numerator)
        return '%d/%d' % (value.numerator, value.denominator)
    if isinstance(value, (np.integer, int)):
        return int(value)
    if isinstance(value, (np.floating, float)):
        return float(value)
    if isinstance(value, (complex, np.complexfloating)):
        value = complex(value)
        return [value.real, value.imag]
    if isinstance(value, numbers.Number):
        return float(value)
    if isinstance(value, dict):
        return dict((str(k), encode_value(v)) for k, v in value.items())
    if isinstance(value, (list, tuple, np.ndarray)):
        return [encode_value(v) for v in value]
    if hasattr(value, 'value'):
        return encode_value(value.value)
    return str(value)


def encode_record(record):
    """ One line of the records file: sorted keys, floats as the shortest
    round-trip decimal. """
    return json.dumps(encode_value(record), sort_keys=True,
                      separators=(',', ':'), ensure_ascii=False)


def write_records(path, records):
    with open(path, 'a', encoding='utf-8') as handle:
        for record in records:
            handle.write(encode_record(record) + '\n')


def write_csv(path, columns, rows):
    with open(path, 'w', newline='', encoding='utf-8') as handle:
        writer = csv.writer(handle)
        writer.writerow(columns)
        for row in rows:
            writer.writerow([_cell(v) for v in row])


def _cell(value):
    encoded = encode_value(value)
    if isinstance(encoded, list):
        return ' '.join(repr(v) for v in encoded)
    if isinstance(encoded, float):
        return repr(encoded)
    return encoded
