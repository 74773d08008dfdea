import unittest

from OptimalKernelLibrary.errors import ParameterError
from OptimalKernelLibrary.utils import (is_falsy, is_noney, is_truthy,
                                        parse_number_list, to_float, to_int,
                                        to_positive_float)


class IsTruthyFalsyNoneyTests(unittest.TestCase):
    truthy = ['foo', ' ', 1, 2.3, True, [1], 'True', {'k': 'v'}]
    falsy = [0, False, None, [], {}, (), u'', '', 'False', 'None', '0', 'off']

    def test_is_truthy(self):
        for item in self.truthy:
            self.assertTrue(is_truthy(item) is True)
        for item in self.falsy:
            self.assertTrue(is_truthy(item) is False)

    def test_is_falsy(self):
        for item in self.truthy:
            self.assertTrue(is_falsy(item) is False)
        for item in self.falsy:
            self.assertTrue(is_falsy(item) is True)

    def test_is_noney(self):
        for item in [None, 'None', 'NONE', 'none']:
            self.assertTrue(is_noney(item) is True)
        for item in self.truthy + [False, 0, 'False', '', [], {}, ()]:
            self.assertTrue(is_noney(item) is False)


class NumberConversionTests(unittest.TestCase):

    def test_to_float_accepts_fractions(self):
        self.assertEqual(to_float('3/2'), 1.5)
        self.assertEqual(to_float(' 1/5 '), 0.2)
        self.assertEqual(to_float('2.5'), 2.5)
        self.assertEqual(to_float(4), 4.0)

    def test_to_float_errors(self):
        for value in ['foo', '1/0', '1/x', None]:
            with self.assertRaises(ParameterError):
                to_float(value, 'beta')

    def test_to_int(self):
        self.assertEqual(to_int('3'), 3)
        self.assertEqual(to_int(2.0), 2)
        with self.assertRaisesRegex(ParameterError, 'Order m must be an '
                                                    'integer'):
            to_int('2.5', 'order m')
        with self.assertRaises(ParameterError):
            to_int('two')

    def test_to_positive_float(self):
        self.assertEqual(to_positive_float('0.5'), 0.5)
        with self.assertRaisesRegex(ParameterError, 'Bandwidth must be '
                                                    'positive'):
            to_positive_float(0, 'bandwidth')

    def test_parse_number_list(self):
        self.assertEqual(parse_number_list('1024, 4096,'), [1024.0, 4096.0])
        self.assertEqual(parse_number_list(['1', 2], to_int), [1, 2])
        self.assertEqual(parse_number_list('1/2,1/4'), [0.5, 0.25])
