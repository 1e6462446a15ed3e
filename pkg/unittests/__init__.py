# __init__
from . import common
