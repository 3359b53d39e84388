"""
Módulo de Comandos - un módulo por subcomando de la línea de comandos.
"""

from napoleon.commands import align, fermat, iterate, plot, transform, verify
from napoleon.commands.align import cmd_align
from napoleon.commands.fermat import cmd_fermat
from napoleon.commands.iterate import cmd_iterate
from napoleon.commands.plot import cmd_plot
from napoleon.commands.transform import cmd_transform
from napoleon.commands.verify import cmd_verify

SUBCOMMANDS = (transform, iterate, align, fermat, verify, plot)

__all__ = [
    'SUBCOMMANDS',
    'cmd_align',
    'cmd_fermat',
    'cmd_iterate',
    'cmd_plot',
    'cmd_transform',
    'cmd_verify',
]
