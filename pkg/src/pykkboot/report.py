"""
Run reports

A RunReport collects the command echo, the structured result, any
unrepresentable tags and a list of property checks. It renders to JSON
(for --json) and to text, and tabulates the property checks in a pandas
DataFrame.

"""

import json
from dataclasses import dataclass, field

import pandas

@dataclass
class PropertyCheck:
    """
    Pass/fail tally of one property over a corpus

    Arguments:
        name (str) : Property name

    Keyword arguments:
        passed (int) : Cases that held
        failed (int) : Cases that failed
        witness (str) : First counterexample

    """

    name    : str
    passed  : int = 0
    failed  : int = 0
    witness : str = None

    def record(self, ok, witness=None):
        """Tally one case; keep the first counterexample"""

        if ok:
            self.passed += 1
        else:
            self.failed += 1
            if self.witness is None and witness is not None:
                self.witness = str(witness)
        return ok

    @property
    def ok(self):
        return self.failed == 0

    @property
    def checked(self):
        return self.passed + self.failed

    def to_dict(self):
        return {
            'name'    : self.name,
            'pass'    : self.ok,
            'checked' : self.checked,
            'failed'  : self.failed,
            'witness' : self.witness,
        }

@dataclass
class RunReport:
    """
    Result of one command

    Arguments:
        command (str) : Command name

    Keyword arguments:
        inputs (list) : Input expressions, as given
        result (dict) : {'deg0', 'deg1'}, {'set'} or {'bool'} (or None)
        unrepresentable (list) : Tags of unrepresentable results
        properties (list) : PropertyCheck instances
        timing (float) : Wall time in seconds

    """

    command         : str
    inputs          : list  = field(default_factory=list)
    result          : dict  = None
    unrepresentable : list  = field(default_factory=list)
    properties      : list  = field(default_factory=list)
    timing          : float = None

    def check(self, name):
        """The PropertyCheck called name, created on first use"""

        for prop in self.properties:
            if prop.name == name:
                return prop
        prop = PropertyCheck(name)
        self.properties.append( prop )
        return prop

    def extend(self, other):
        """Append the property checks of another report"""

        self.properties.extend( other.properties )
        self.unrepresentable = sorted( set(self.unrepresentable) | set(other.unrepresentable) )
        return self

    @property
    def ok(self):
        return all(prop.ok for prop in self.properties)

    def summary(self):
        """
        Property checks as a table

        Returns:
            pandas.DataFrame : One row per property with the columns
                checked, passed, failed, pass and witness

        """

        frame = pandas.DataFrame(
            [
                {
                    'name'    : prop.name,
                    'checked' : prop.checked,
                    'passed'  : prop.passed,
                    'failed'  : prop.failed,
                    'pass'    : prop.ok,
                    'witness' : prop.witness,
                }
                for prop in self.properties
            ],
            columns = ['name', 'checked', 'passed', 'failed', 'pass', 'witness'],
        )
        return frame.set_index('name')

    def to_dict(self, timing=False):

        out = {
            'command'         : self.command,
            'inputs'          : list(self.inputs),
            'result'          : self.result,
            'unrepresentable' : sorted( set(self.unrepresentable) ),
            'properties'      : [prop.to_dict() for prop in self.properties],
        }
        if timing:
            out['timing'] = self.timing
        return out

    def to_json(self, timing=False):
        return json.dumps( self.to_dict(timing=timing), indent=2, ensure_ascii=False )

    def to_text(self, timing=True):

        lines = [f'{self.command} {" ".join(self.inputs)}'.rstrip()]
        result = self.result or {}
        if 'deg0' in result:
            lines.append( f'  degree 0 : {result["deg0"]}' )
            lines.append( f'  degree 1 : {result["deg1"]}' )
        for key in ('set', 'bool'):
            if key in result:
                lines.append( f'  {key} : {_text_value(result[key])}' )
        for key, val in result.items():
            if key not in ('deg0', 'deg1', 'set', 'bool'):
                lines.append( f'  {key} : {_text_value(val)}' )
        if self.properties:
            with pandas.option_context('display.max_colwidth', 80, 'display.width', 160):
                lines.append( self.summary().to_string() )
            lines.append( 'PASS' if self.ok else 'FAIL' )
        if timing and self.timing is not None:
            lines.append( f'  time : {self.timing:.3f} s' )
        return '\n'.join(lines)

def _text_value(value):

    if isinstance(value, bool):
        return str(value).lower()
    if isinstance(value, list):
        return '{' + ', '.join( str(v) for v in value ) + '}'
    if value == 'all':
        return 'All'
    return str(value)
