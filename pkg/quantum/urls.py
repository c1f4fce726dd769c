from django.urls import path
from . import views

urlpatterns = [
    path('entropy/', views.entropy_view, name='quantum-entropy'),
    path('holevo/', views.holevo_view, name='quantum-holevo'),
    path('erase/', views.erase_view, name='quantum-erase'),
]
