import json
import unittest

from pykkboot.report import PropertyCheck, RunReport

class TestPropertyCheck(unittest.TestCase):

    def test_record(self):

        prop = PropertyCheck('symmetry')
        self.assertTrue( prop.record(True) )
        self.assertFalse( prop.record(False, 'first') )
        prop.record(False, 'second')
        self.assertEqual( (prop.passed, prop.failed, prop.checked), (1, 2, 3) )
        self.assertEqual( prop.witness, 'first' )
        self.assertFalse( prop.ok )
        self.assertEqual( prop.to_dict()['pass'], False )

class TestRunReport(unittest.TestCase):

    def setUp(self):

        self.report = RunReport('support', ['moore(12)'], result={'set': [2, 3]}, timing=0.5)

    def test_check(self):

        self.assertTrue( self.report.ok )
        self.report.check('a').record(True)
        self.report.check('a').record(True)
        self.assertEqual( len(self.report.properties), 1 )
        self.assertEqual( self.report.check('a').checked, 2 )
        self.report.check('b').record(False, 'x')
        self.assertFalse( self.report.ok )

    def test_extend(self):

        other = RunReport('verify', unrepresentable=['Ext(Q,Z)'])
        other.check('c').record(True)
        self.report.extend(other)
        self.assertEqual( [prop.name for prop in self.report.properties], ['c'] )
        self.assertEqual( self.report.unrepresentable, ['Ext(Q,Z)'] )

    def test_json(self):

        data = json.loads( self.report.to_json() )
        self.assertEqual( data['command'], 'support' )
        self.assertEqual( data['result'], {'set': [2, 3]} )
        self.assertNotIn( 'timing', data )
        self.assertEqual( json.loads(self.report.to_json(timing=True))['timing'], 0.5 )

    def test_text(self):

        self.report.check('round-trip').record(False, '{2}')
        text = self.report.to_text()
        self.assertTrue( text.startswith('support moore(12)') )
        self.assertIn( 'set : {2, 3}', text )
        self.assertIn( 'FAIL', text )
        self.assertIn( 'time', text )
        self.assertNotIn( 'time', self.report.to_text(timing=False) )

    def test_summary(self):

        self.report.check('a').record(True)
        self.report.check('b').record(False, 'w')
        frame = self.report.summary()
        self.assertEqual( list(frame.index), ['a', 'b'] )
        self.assertEqual( frame.loc['b', 'witness'], 'w' )
        self.assertEqual( int(frame['checked'].sum()), 2 )

if __name__ == "__main__":
    unittest.main()
