"""Configure Django before pytest collects the suites (``./manage.py test`` does this itself)."""
import os

import django

os.environ.setdefault('DJANGO_SETTINGS_MODULE', 'germclass.settings')
django.setup()
