# @Email: hypershell-dev@users.noreply.github.com
# @Website: https://github.com/hypershell/hypershell
# @License: https://github.com/hypershell/hypershell/blob/master/LICENSE
# @github: https://github.com/hypershell/hypershell
#
# Copyright (c) 2018-2020 the HyperShell authors and collaborators
from ..Logger import get_logger
from .constants import UUID_ORDER
from .Exceptions import StageError

from abc import ABCMeta, abstractmethod
from collections import namedtuple
from uuid import uuid4
import copy


Expectation = namedtuple('Expectation',
                         ['stage', 'name', 'expected', 'actual', 'ok'])
"""comparison of a computed value against the catalog annotation"""


class Stage(metaclass=ABCMeta):
    """a named unit of work run by a Pipeline on one triangle group. This
    class is designed to be inherited from.

    Note:
        you must overload `Stage.process()` if you intend to inherit from this
        class

    Attributes:
        uuid(str): hex uuid for this stage
        name(str): name of the stage in the pipeline graph, defaults to the
            class attribute `stage_name`
        logger(:obj:`HypershellLogger`): Logger object for this stage. When run
            in a pipeline this logger is temporarily replaced with a child of
            the Pipeline's logger
        requires(tuple): names of upstream stages whose output this stage
            needs. The stage is skipped when one of them failed or was skipped
        uses(tuple): names of upstream stages whose output is used when
            present. They only constrain the execution order
    """
    stage_name = None
    requires = ()
    uses = ()

    def __init__(self, name=None):
        self.uuid = uuid4().hex

        if name is None:
            name = self.stage_name or self.__class__.__name__
        self.name = name
        self.logger = get_logger(self.id)

    ############################################################################
    #                           overloadable
    ############################################################################
    @abstractmethod
    def process(self, context):
        """computes this stage's output from the pipeline context

        Args:
            context(dict): the pipeline context, holding the group, the
                options and the outputs of every stage run so far

        Returns:
            object: the output, stored as context[self.name]
        """
        pass

    ############################################################################
    #                           primary frontend
    ############################################################################
    def expect(self, context, name, expected, actual, ok=None):
        """records an expectation check in the context

        Returns:
            bool: whether the expectation holds
        """
        if ok is None:
            ok = (expected == actual)
        ok = bool(ok)
        context['expectations'].append(
                Expectation(self.name, name, expected, actual, ok))
        if not ok:
            self.logger.warning("{}: expected {}, found {}".format(name,
                                                                 expected,
                                                                 actual))
        return ok

    def rename(self, name):
        """renames the stage to the given name. The id is reset in this
        process"""
        if not isinstance(name, str):
            msg = "name must be string"
            self.logger.error(msg)
            raise StageError(msg)

        old_name = self.name
        self.name = name
        self._unpair_logger()
        self.logger.warning("renamed from '%s' to '%s'" % (old_name, self.name))
        return self

    def copy(self):
        """fetches a shallow copy of this stage with the UUID updated"""
        copied = copy.copy(self)
        copied.uuid = uuid4().hex
        copied._unpair_logger()
        return copied

    ############################################################################
    #                 called internally or by Pipeline
    ############################################################################
    def _pipeline_process(self, context, logger):
        """runs the stage inside a pipeline, logging through a child of the
        pipeline logger"""
        self._pair_logger(logger)
        try:
            self.logger.info("processing {}".format(context['group'].label))
            return self.process(context)
        finally:
            self._unpair_logger()

    def _pair_logger(self, pipeline_logger):
        """creates or fetches a new child logger of the pipeline for this
        stage"""
        self.logger = pipeline_logger.getChild(self.id)

    def _unpair_logger(self):
        """restores the original stage logger"""
        self.logger = get_logger(self.id)

    ############################################################################
    #                               special
    ############################################################################
    def __getstate__(self):
        return self.__dict__

    def __setstate__(self, state):
        """resets the uuid in the event of a copy"""
        state['uuid'] = uuid4().hex
        self.__dict__.update(state)
        self.logger = get_logger(self.id)

    def __str__(self):
        return self.id

    def __repr__(self):
        return "{}(requires={}, uses={})".format(self.id, self.requires,
                                                  self.uses)

    ############################################################################
    #                               properties
    ############################################################################
    @property
    def id(self):
        """str: an unique id for this stage

        This id is a combination of the stage's non-unique name and part of
        its uuid (last UUID_ORDER characters)
        """
        return "{}#{}".format(self.name, self.uuid[-UUID_ORDER:])

# END
