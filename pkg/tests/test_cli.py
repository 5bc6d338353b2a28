import io
import json
import unittest
from contextlib import redirect_stdout

import pykkboot
from pykkboot import constants
from pykkboot.cli import main
from pykkboot.groups import GroupExpr, GroupValue

def run(*argv):
    """Exit code and captured stdout of one CLI call"""

    out = io.StringIO()
    with redirect_stdout(out):
        code = main( list(argv) )
    return code, out.getvalue()

def run_json(*argv):

    code, text = run(*argv, '--json')
    return code, json.loads(text)

class TestCommands(unittest.TestCase):

    def test_kk(self):

        code, report = run_json('kk', 'unit', 'Z/6 [0]')
        self.assertEqual( code, constants.EXIT_OK )
        self.assertEqual( report['result'], {'deg0': 'Z/6', 'deg1': '0'} )
        self.assertEqual( report['inputs'], ['unit', 'Z/6 [0]'] )

        code, report = run_json('kk', 'kappa(2)', 'kappa(2)')
        self.assertEqual( report['result'], {'deg0': 'Z/2', 'deg1': 'Z/2'} )

    def test_kk_unrepresentable(self):

        code, report = run_json('kk', 'iota(2)', 'unit')
        self.assertEqual( code, constants.EXIT_OK )
        self.assertTrue( report['result']['deg1'].startswith('nonzero') )
        self.assertTrue( report['unrepresentable'] )

        code, _ = run('kk', 'iota(2)', 'unit', '--strict')
        self.assertEqual( code, constants.EXIT_UNREPRESENTABLE )
        code, _ = run('kk', 'kappa(2)', 'unit', '--strict')
        self.assertEqual( code, constants.EXIT_OK )

    def test_tensor(self):

        code, report = run_json('tensor', 'moore(4)', 'moore(6)')
        self.assertEqual( report['result'], {'deg0': 'Z/2', 'deg1': 'Z/2'} )

    def test_support(self):

        code, report = run_json('support', 'moore(12)')
        self.assertEqual( report['result'], {'set': [2, 3]} )
        code, report = run_json('support', 'unit')
        self.assertEqual( report['result'], {'set': 'all'} )
        code, report = run_json('suppz', 'iota(3) + Q')
        self.assertEqual( report['result'], {'set': [0, 3]} )

    def test_member(self):

        code, report = run_json('member', 'moore(12)', '--set', '2,3')
        self.assertTrue( report['result']['bool'] )
        code, report = run_json('member', 'moore(12)', '--set', '2')
        self.assertFalse( report['result']['bool'] )
        code, report = run_json('member', 'unit', '--set', 'all')
        self.assertTrue( report['result']['bool'] )

    def test_generates(self):

        code, report = run_json('generates', 'moore(4)', 'kappa(2)')
        self.assertTrue( report['result']['bool'] )
        code, report = run_json('generates', 'kappa(3)', 'kappa(2)', 'kappa(5)')
        self.assertFalse( report['result']['bool'] )
        code, report = run_json('generates', 'kappa(3)')
        self.assertFalse( report['result']['bool'] )

    def test_smashing(self):

        code, report = run_json('smashing', '--set', '0')
        self.assertEqual( code, constants.EXIT_OK )
        self.assertFalse( report['result']['bool'] )
        self.assertEqual( report['properties'][0]['name'], 'nonzero-map-iota(0)-to-iota(p)' )

        code, report = run_json('smashing', '--set', '2,5')
        self.assertTrue( report['result']['bool'] )
        self.assertEqual( report['properties'], [] )

    def test_cone(self):

        code, report = run_json(
            'cone', 'moore(4)', 'moore(2)', '--f0', '[[1]]', '--expect', 'S kappa(2)',
        )
        self.assertEqual( code, constants.EXIT_OK )
        self.assertEqual( report['result'], {'deg0': '0', 'deg1': 'Z/2'} )

        code, report = run_json('cone', 'unit', 'unit', '--f0', '[[3]]', '--expect', 'moore(3)')
        self.assertEqual( code, constants.EXIT_OK )

    def test_cone_ambiguous(self):

        code, report = run_json('cone', 'kappa(2)', 'S kappa(2)')
        self.assertEqual( code, constants.EXIT_FAILURE )
        self.assertEqual( report['result'], {'deg0': '0', 'deg1': 'Z/2 + Z/2'} )

    def test_oracle(self):

        code, report = run_json('oracle', 'hom', 'Z/4', 'Z/6')
        self.assertEqual( report['result'], {'deg0': 'Z/2', 'deg1': '0'} )
        code, report = run_json('oracle', 'tor', 'Z/6', 'Z/15')
        self.assertEqual( report['result']['deg0'], 'Z/3' )

    def test_verify(self):

        code, report = run_json('verify', 'smashing', '--prime-bound', '5')
        self.assertEqual( code, constants.EXIT_OK )
        self.assertEqual( report['result']['suites'], ['smashing'] )
        self.assertEqual( report['result']['passed'], report['result']['properties'] )
        self.assertNotIn( 'timing', report )

        code, report = run_json('verify', 'smashing', '--prime-bound', '3', '--timing')
        self.assertIn( 'timing', report )

    def test_text(self):

        code, text = run('support', 'moore(12)')
        self.assertIn( 'set : {2, 3}', text )
        code, text = run('member', 'moore(12)', '--set', '2')
        self.assertIn( 'bool : false', text )

class TestExitCodes(unittest.TestCase):

    def test_parse_error(self):

        code, out = run('kk', 'Z/0', 'unit')
        self.assertEqual( code, constants.EXIT_USAGE )
        self.assertEqual( out, '' )

    def test_usage(self):

        self.assertEqual( run('verify', 'nonsense')[0], constants.EXIT_USAGE )
        self.assertEqual( run('member', 'unit', '--set', '4')[0], constants.EXIT_USAGE )
        self.assertEqual( run('oracle', 'hom', 'Z', 'Z/2')[0], constants.EXIT_USAGE )
        self.assertEqual( run('cone', 'moore(2)', 'moore(4)', '--f0', '[[1]]')[0], constants.EXIT_USAGE )
        self.assertEqual( run('cone', 'unit', 'unit', '--f0', '[[1')[0], constants.EXIT_USAGE )
        with self.assertRaises(SystemExit):
            run('oracle', 'cotor', 'Z/2', 'Z/2')

class TestBifunctor(unittest.TestCase):

    def test_dispatch(self):

        C = GroupExpr.cyclic
        self.assertEqual( pykkboot.bifunctor('hom', C(4), C(6)), GroupValue.exact(C(2)) )
        self.assertEqual( pykkboot.bifunctor('TOR', C(6), C(15)), C(3) )
        with self.assertRaises(Exception):
            pykkboot.bifunctor('cotor', C(2), C(2))

if __name__ == "__main__":
    unittest.main()
