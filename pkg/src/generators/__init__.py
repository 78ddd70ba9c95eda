from .named_instances import (fig1_instance, example1_instance, obs4_instance, appendix_b_instance, tight_c_instance,
                              extended_condorcet, condorcet_beater)
from .random_instances import GENERATOR_NAME, random_instance, random_ranking, random_instances
