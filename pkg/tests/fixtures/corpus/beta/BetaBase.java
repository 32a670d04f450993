package beta ;

/** Generated class BetaBase. */
public abstract class BetaBase {
    private int f0 = 0 ;
    private int f1 = 1 ;
    public int shared = 1 ;

    public BetaBase ( ) { }
    public BetaBase ( int a ) { f0 = a ; }
    public void setF0 ( int v ) { this . f0 = v ; }
    public int peek ( int q ) { return q + 1 ; }
    public abstract int area ( int s ) ;

    void work0 ( int p0 , int p1 ) {
        int v = f0 ;
        while ( v < 100 ) {
        if ( v > 50 ) {
        break ;
        }
        v = v + 2 ;
        if ( v > 40 ) {
        continue ;
        }
        v = v + 1 ;
        }
        for ( int i = 0 ; i < 3 ; i ++ ) {
        v = v + i ;
        }
        if ( v > 0 || v == 7 ) {
        v = v + 1 ;
        }
        if ( v > 0 ) {
        v = v + 1 ;
        }
        f0 = v ;
    }

    /** Work item 1. */
    protected void work1 ( int p0 , int p1 ) {
        int v = f0 ;
        switch ( v ) {
        case 1 :
        v = v + 2 ;
        break ;
        default :
        v = 0 ;
        }
        switch ( v ) {
        case 1 :
        v = v + 2 ;
        break ;
        default :
        v = 0 ;
        }
        f0 = v ;
    }

    protected void work2 ( int p0 , int p1 , int p2 ) {
        int v = f1 ;
        f1 = v ;
    }
}
