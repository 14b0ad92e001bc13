import os

import django

os.environ.setdefault('DJANGO_SETTINGS_MODULE', 'sistema_nudos.settings')
django.setup()
