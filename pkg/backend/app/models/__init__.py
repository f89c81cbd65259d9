# 
