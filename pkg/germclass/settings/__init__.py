from germclass.settings.core import *
from germclass.settings.custom import *
from germclass.settings.log import *
